#include "trinary/report.hpp"

#include <cmath>
#include <numbers>

#include "trinary/benford.hpp"
#include "trinary/codes.hpp"
#include "trinary/k3.hpp"
#include "trinary/numeral.hpp"
#include "trinary/published.hpp"
#include "trinary/radix.hpp"
#include "trinary/rational.hpp"

namespace trinary::report {
namespace {

using format::fixed;
using format::Table;

constexpr double kHalfUlp3 = 0.0005;
constexpr double kCodingTolerance = 0.01;

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string base_label(double base) {
  if (base == std::numbers::e) return "e";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", base);
  return buf;
}

std::vector<Table2Cell> table2_cells() {
  std::vector<Table2Cell> cells;
  for (int base : {2, 3, 4}) {
    const auto& printed = published::range_counts(base);
    for (std::size_t i = 0; i < published::kRangeCountN.size(); ++i) {
      const auto tally = numeral::range_count(published::kRangeCountN[i], base);
      cells.push_back({tally.n, base, tally.total_digits, printed[i], tally.range_count});
    }
  }
  return cells;
}

Table efficiency_table(std::span<const double> bases) {
  Table t{{"base", "E_nats", "E_bits"}, {}};
  for (double b : bases) {
    t.add_row({base_label(b), fixed(radix::efficiency(b, radix::Unit::Nats)),
               fixed(radix::efficiency(b, radix::Unit::Bits))});
  }
  return t;
}

Table table1() {
  std::vector<double> bases;
  for (const auto& row : published::efficiency_table()) bases.push_back(row.base);
  return efficiency_table(bases);
}

Table digits_table(std::uint64_t n, std::span<const int> bases) {
  Table t{{"N", "base", "total_digits", "range_count"}, {}};
  for (int b : bases) {
    const auto tally = numeral::range_count(n, b);
    t.add_row({std::to_string(tally.n), std::to_string(b), std::to_string(tally.total_digits),
               std::to_string(tally.range_count)});
  }
  return t;
}

Table table2() {
  Table t{{"N", "base", "total_digits", "printed", "oracle", "flag"}, {}};
  for (const auto& c : table2_cells()) {
    t.add_row({std::to_string(c.n), std::to_string(c.base), std::to_string(c.total_digits),
               std::to_string(c.published), std::to_string(c.oracle), c.matches() ? "" : "MISMATCH"});
  }
  return t;
}

Table table3() {
  Table t{{"symbols", "radix", "codewords", "average_length"}, {}};
  for (int radix : {2, 3}) {
    for (int m = 3; m <= 9; ++m) {
      const auto code = codes::enumeration_code(m, radix);
      t.add_row({std::to_string(m), std::to_string(radix), join(code.strings(), " "),
                 format_rational(codes::average_length(code))});
    }
  }
  return t;
}

Table table4() {
  Table t{{"symbols", "binary_bits", "ternary_trits", "ternary_bits"}, {}};
  for (const auto& row : codes::table4_report()) {
    t.add_row({std::to_string(row.symbols), format_rational(row.binary_bits), format_rational(row.ternary_trits),
               fixed(row.ternary_bits)});
  }
  return t;
}

Table benford_table(int base) {
  const auto dist = benford::first_digit_probs(base);
  Table t{{"digit", "probability"}, {}};
  for (int d = 1; d < base; ++d) t.add_row({std::to_string(d), fixed(dist(d))});
  return t;
}

Table table5() {
  Table t{{"base", "1", "2", "3", "4", "5", "6", "7", "8", "9"}, {}};
  for (int base = 3; base <= 10; ++base) {
    const auto dist = benford::first_digit_probs(base);
    std::vector<std::string> row{std::to_string(base)};
    for (int d = 1; d <= 9; ++d) row.push_back(d < base ? fixed(dist(d)) : "");
    t.add_row(std::move(row));
  }
  return t;
}

Table table6() {
  Table t{{"A", "B", "NOT A", "A OR B", "A AND B"}, {}};
  for (auto a : k3::kAllTrits) {
    for (auto b : k3::kAllTrits) {
      t.add_row({k3::to_string(a), k3::to_string(b), k3::to_string(k3::k3_not(a)), k3::to_string(k3::k3_or(a, b)),
                 k3::to_string(k3::k3_and(a, b))});
    }
  }
  return t;
}

Table table8() {
  Table t{{"A", "B", "result"}, {}};
  for (auto a : k3::kAllTrits) {
    for (auto b : k3::kAllTrits) {
      t.add_row({k3::to_string(a), k3::to_string(b), k3::to_string(k3::quantum_measure(a, b))});
    }
  }
  return t;
}

Table discrepancy_table(const std::vector<Discrepancy>& list) {
  Table t{{"table", "cell", "published", "computed", "deviation"}, {}};
  for (const auto& d : list) t.add_row({d.table, d.cell, d.published, d.computed, fixed(d.deviation, 4)});
  return t;
}

std::vector<Discrepancy> discrepancies() {
  std::vector<Discrepancy> out;
  auto check = [&out](const std::string& table, const std::string& cell, double printed, double computed,
                      double tolerance, int decimals) {
    const double dev = std::abs(computed - printed);
    if (dev > tolerance) out.push_back({table, cell, fixed(printed, decimals), fixed(computed, 4), dev});
  };

  for (const auto& row : published::efficiency_table()) {
    const std::string b = std::string("b=") + row.label;
    check("efficiency", b + " nats", row.nats, radix::efficiency(row.base, radix::Unit::Nats), kHalfUlp3, 3);
    check("efficiency", b + " bits", row.bits, radix::efficiency(row.base, radix::Unit::Bits), kHalfUlp3, 3);
  }

  for (const auto& c : table2_cells()) {
    if (!c.matches()) {
      out.push_back({"range_count", "N=" + std::to_string(c.n) + " base=" + std::to_string(c.base),
                     std::to_string(c.published), std::to_string(c.oracle),
                     std::abs(static_cast<double>(c.oracle) - static_cast<double>(c.published))});
    }
  }

  const auto computed4 = codes::table4_report();
  const auto& printed4 = published::coding_comparison();
  for (std::size_t i = 0; i < printed4.size(); ++i) {
    const std::string m = "m=" + std::to_string(printed4[i].symbols);
    check("coding", m + " binary bits", printed4[i].binary_bits, to_double(computed4[i].binary_bits),
          kCodingTolerance, 2);
    check("coding", m + " ternary trits", printed4[i].ternary_trits, to_double(computed4[i].ternary_trits),
          kCodingTolerance, 2);
    check("coding", m + " ternary bits", printed4[i].ternary_bits, computed4[i].ternary_bits, kCodingTolerance, 2);
  }

  for (int base = 3; base <= 10; ++base) {
    const auto dist = benford::first_digit_probs(base);
    const auto& printed = published::first_digit_probs(base);
    for (int d = 1; d < base; ++d) {
      check("first_digit", "base=" + std::to_string(base) + " d=" + std::to_string(d),
            printed[static_cast<std::size_t>(d - 1)], dist(d), kHalfUlp3, 3);
    }
  }
  return out;
}

std::string full_report(format::OutputFormat fmt) {
  struct Section {
    const char* title;
    Table table;
  };
  const std::vector<Section> sections{
      {"Efficiency per symbol", table1()},
      {"Range counts", table2()},
      {"Enumeration codes", table3()},
      {"Binary vs ternary enumeration coding", table4()},
      {"First-digit probabilities", table5()},
      {"Kleene NOT / OR / AND", table6()},
      {"Photon measurement table", table8()},
      {"Discrepancies against published values", discrepancy_table(discrepancies())},
  };

  if (fmt == format::OutputFormat::Json) {
    std::string out = "{\n";
    for (std::size_t i = 0; i < sections.size(); ++i) {
      std::string body = format::render(sections[i].table, fmt);
      body.pop_back();
      out += "\"" + std::string(sections[i].title) + "\": " + body + (i + 1 < sections.size() ? ",\n" : "\n");
    }
    return out + "}\n";
  }

  std::string out;
  for (const auto& s : sections) {
    out += (fmt == format::OutputFormat::Markdown ? "## " : "# ") + std::string(s.title) + "\n";
    if (fmt == format::OutputFormat::Markdown) out += "\n";
    out += format::render(s.table, fmt) + "\n";
  }
  return out;
}

}  // namespace trinary::report
