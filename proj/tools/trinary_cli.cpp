// trinary: reproduces the radix-economy, range-count, coding, first-digit and
// three-valued logic tables and exposes the library operations.
//
// Exit codes: 0 success, 1 computation or parse error, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trinary/benford.hpp"
#include "trinary/codes.hpp"
#include "trinary/error.hpp"
#include "trinary/expr.hpp"
#include "trinary/format.hpp"
#include "trinary/numeral.hpp"
#include "trinary/radix.hpp"
#include "trinary/rational.hpp"
#include "trinary/report.hpp"

namespace {

using trinary::UsageError;
using trinary::format::OutputFormat;
using trinary::format::Table;

struct Options {
  std::string format = "csv";

  // efficiency
  bool table1 = false;
  std::vector<double> bases;
  double from = 0.0, to = 0.0, step = 0.0;
  std::string unit = "both";

  // digits
  bool table2 = false;
  std::uint64_t n = 0;
  std::vector<int> digit_bases{2, 3, 4};
  bool rank = false;

  // codes
  bool table3 = false, table4 = false;
  int symbols = 0;
  int radix = 2;
  std::string weights_file;
  std::vector<double> weight_values;

  // benford
  bool table5 = false;
  int benford_base = 0;
  bool identities = false, compare = false;

  // logic
  bool table6 = false, table8 = false;
  std::string expression;
  std::vector<std::string> binds;
};

OutputFormat output_format(const Options& o) {
  const auto f = trinary::format::parse_format(o.format);
  if (!f) throw UsageError("unknown --format '" + o.format + "' (csv, markdown, json)");
  return *f;
}

void emit(const Table& t, const Options& o) { std::cout << trinary::format::render(t, output_format(o)); }

// Listing plus summary as one document: two tables, or one JSON object.
void emit_pair(const Table& listing, const Table& summary, const Options& o) {
  const auto fmt = output_format(o);
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["codewords"] = nlohmann::ordered_json::parse(trinary::format::render(listing, fmt));
    doc["summary"] = nlohmann::ordered_json::parse(trinary::format::render(summary, fmt));
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << trinary::format::render(listing, fmt) << "\n" << trinary::format::render(summary, fmt);
}

void run_efficiency(const Options& o) {
  namespace radix = trinary::radix;
  std::vector<double> bases;
  if (o.table1) {
    emit(trinary::report::table1(), o);
    return;
  }
  if (!o.bases.empty()) {
    for (double b : o.bases) {
      if (!(b > 1.0)) throw UsageError("--bases values must be > 1");
    }
    bases = o.bases;
  } else if (o.step != 0.0 || o.from != 0.0 || o.to != 0.0) {
    for (const auto& p : radix::efficiency_curve(o.from, o.to, o.step)) bases.push_back(p.base);
  } else {
    throw UsageError("efficiency needs --table1, --bases or --from/--to/--step");
  }

  Table full = trinary::report::efficiency_table(bases);
  if (o.unit == "both") {
    emit(full, o);
    return;
  }
  const std::size_t col = o.unit == "nats" ? 1 : 2;
  Table t{{"base", full.columns[col]}, {}};
  for (const auto& r : full.rows) t.add_row({r[0], r[col]});
  emit(t, o);
}

void run_digits(const Options& o) {
  if (o.table2) {
    emit(trinary::report::table2(), o);
    return;
  }
  if (o.n < 1) throw UsageError("digits needs --table2 or --n >= 1");
  for (int b : o.digit_bases) {
    if (b < 2) throw UsageError("--bases values must be >= 2");
  }
  if (!o.rank) {
    emit(trinary::report::digits_table(o.n, o.digit_bases), o);
    return;
  }
  Table t{{"rank", "N", "base", "total_digits", "range_count"}, {}};
  int rank = 1;
  for (const auto& tally : trinary::numeral::best_base(o.n, o.digit_bases)) {
    t.add_row({std::to_string(rank++), std::to_string(tally.n), std::to_string(tally.base),
               std::to_string(tally.total_digits), std::to_string(tally.range_count)});
  }
  emit(t, o);
}

std::string unit_name(int radix) {
  switch (radix) {
    case 2:
      return "bits";
    case 3:
      return "trits";
    default:
      return "radix-" + std::to_string(radix) + " digits";
  }
}

void run_codes_presets(const Options& o) {
  if (o.table3) {
    emit(trinary::report::table3(), o);
  } else if (o.table4) {
    emit(trinary::report::table4(), o);
  } else {
    throw UsageError("codes needs a subcommand (enum, huffman) or --table3/--table4");
  }
}

void run_enum(const Options& o) {
  namespace codes = trinary::codes;
  if (o.symbols < 2) throw UsageError("--symbols must be >= 2");
  const auto code = codes::enumeration_code(o.symbols, o.radix);
  Table listing{{"symbol", "codeword", "length"}, {}};
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    listing.add_row({std::to_string(i), code.codewords[i].to_string(), std::to_string(code.codewords[i].length())});
  }
  const auto avg = codes::average_length(code);
  Table summary{{"metric", "value"}, {}};
  summary.add_row({"average_length_" + unit_name(o.radix), trinary::format_rational(avg)});
  if (o.radix != 2) {
    summary.add_row({"average_length_bits", trinary::format::fixed(codes::to_bits(trinary::to_double(avg), o.radix))});
  }
  summary.add_row({"kraft_sum", trinary::format_rational(codes::kraft_sum(code))});
  emit_pair(listing, summary, o);
}

void run_huffman(const Options& o) {
  namespace codes = trinary::codes;
  std::optional<codes::SymbolWeights> weights;
  if (!o.weights_file.empty()) {
    std::ifstream in(o.weights_file);
    if (!in) throw std::runtime_error("cannot read weights file " + o.weights_file);
    weights = codes::read_weights(in);
  } else if (!o.weight_values.empty()) {
    weights = codes::SymbolWeights(o.weight_values);
  } else {
    throw UsageError("huffman needs --weights FILE or --values w1,w2,...");
  }

  const auto code = codes::huffman(*weights, o.radix);
  const auto p = weights->probabilities();
  Table listing{{"symbol", "weight", "probability", "codeword", "length"}, {}};
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    std::ostringstream w;
    w << weights->raw()[i];
    listing.add_row({std::to_string(i), w.str(), trinary::format::fixed(p[i], 4), code.codewords[i].to_string(),
                     std::to_string(code.codewords[i].length())});
  }
  const double expected = codes::expected_length(code, *weights);
  Table summary{{"metric", "value"}, {}};
  summary.add_row({"expected_length_" + unit_name(o.radix), trinary::format::fixed(expected, 4)});
  if (o.radix != 2) {
    summary.add_row({"expected_length_bits", trinary::format::fixed(codes::to_bits(expected, o.radix), 4)});
  }
  summary.add_row({"dummy_symbols", std::to_string(codes::dummy_count(weights->size(), o.radix))});
  emit_pair(listing, summary, o);
}

void run_benford(const Options& o) {
  namespace benford = trinary::benford;
  using trinary::format::fixed;
  if (o.table5) {
    emit(trinary::report::table5(), o);
    return;
  }
  if (o.benford_base < 3) throw UsageError("benford needs --table5 or --base >= 3");
  if (o.identities) {
    Table t{{"identity", "lhs", "rhs", "residual"}, {}};
    for (const auto& id : benford::digit_identities(o.benford_base)) {
      char res[32];
      std::snprintf(res, sizeof res, "%.3e", id.residual);
      t.add_row({id.describe(), fixed(id.lhs, 6), fixed(id.rhs, 6), res});
    }
    emit(t, o);
    return;
  }
  if (o.compare) {
    if (o.benford_base < 4) throw UsageError("--compare needs --base >= 4");
    const auto cost = benford::coding_cost_comparison(o.benford_base);
    Table t{{"base", "binary_bits", "ternary_trits", "ternary_bits"}, {}};
    t.add_row({std::to_string(o.benford_base), fixed(cost.binary_bits, 4), fixed(cost.ternary_trits, 4),
               fixed(cost.ternary_bits, 4)});
    emit(t, o);
    return;
  }
  emit(trinary::report::benford_table(o.benford_base), o);
}

trinary::expr::Bindings parse_bindings(const std::vector<std::string>& binds) {
  trinary::expr::Bindings b;
  for (const auto& spec : binds) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects NAME=VALUE, got '" + spec + "'");
    const std::string name = spec.substr(0, eq);
    const std::string value = spec.substr(eq + 1);
    if (name.front() == '$') {
      std::string upper = value;
      for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (upper == "NULL") {
        b.data[name.substr(1)] = std::nullopt;
        continue;
      }
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size()) throw UsageError("data binding '" + spec + "' needs an integer or NULL");
      b.data[name.substr(1)] = v;
    } else {
      try {
        b.trits[name] = trinary::k3::parse_trit(value);
      } catch (const trinary::DomainError& e) {
        throw UsageError(e.what());
      }
    }
  }
  return b;
}

void run_logic_presets(const Options& o) {
  if (o.table6) {
    emit(trinary::report::table6(), o);
  } else if (o.table8) {
    emit(trinary::report::table8(), o);
  } else {
    throw UsageError("logic needs a subcommand (eval, table) or --table6/--table8");
  }
}

void run_eval(const Options& o) {
  const auto e = trinary::expr::parse(o.expression);
  const auto result = trinary::expr::eval(e, parse_bindings(o.binds));
  if (output_format(o) == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["expression"] = trinary::expr::to_string(e);
    doc["result"] = trinary::k3::to_int(result);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << trinary::k3::to_string(result) << "\n";
}

void run_table(const Options& o) {
  const auto tt = trinary::expr::truth_table(trinary::expr::parse(o.expression));
  Table t{tt.variables, {}};
  t.columns.push_back("result");
  for (const auto& row : tt.rows) {
    std::vector<std::string> cells;
    for (auto v : row.assignment) cells.push_back(trinary::k3::to_string(v));
    cells.push_back(trinary::k3::to_string(row.result));
    t.add_row(std::move(cells));
  }
  emit(t, o);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Radix economy, prefix codes, first-digit law and Kleene logic workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "markdown", "md", "json"}))
      ->capture_default_str();

  auto* eff = app.add_subcommand("efficiency", "Per-symbol coding efficiency ln(b)/b");
  eff->add_flag("--table1", o.table1, "The ten reference bases, including e");
  eff->add_option("--bases", o.bases, "Comma-separated bases")->delimiter(',')->check(CLI::Range(1.0, 1e300));
  eff->add_option("--from", o.from, "Curve start (exclusive of 1)");
  eff->add_option("--to", o.to, "Curve end (inclusive)");
  eff->add_option("--step", o.step, "Curve step");
  eff->add_option("--unit", o.unit, "nats, bits or both")->check(CLI::IsMember({"nats", "bits", "both"}));

  auto* dig = app.add_subcommand("digits", "Digit tallies and range counts over 1..N");
  dig->add_flag("--table2", o.table2, "Reference range counts with oracle comparison");
  dig->add_option("--n", o.n, "Upper end of the counted range");
  dig->add_option("--bases", o.digit_bases, "Comma-separated bases")->delimiter(',');
  dig->add_flag("--rank", o.rank, "Sort by range count, smaller base first on ties");

  auto* cod = app.add_subcommand("codes", "Prefix codes: enumeration and Huffman");
  cod->add_flag("--table3", o.table3, "Enumeration codes for 3..9 symbols");
  cod->add_flag("--table4", o.table4, "Binary vs ternary average lengths for 3..10 symbols");
  auto* en = cod->add_subcommand("enum", "Equiprobable enumeration code");
  en->add_option("--symbols", o.symbols, "Number of symbols")->required();
  en->add_option("--radix", o.radix, "Code alphabet size")->check(CLI::Range(2, 36));
  auto* hf = cod->add_subcommand("huffman", "Radix-r Huffman code");
  hf->add_option("--weights", o.weights_file, "File with one weight per line ('#' comments)");
  hf->add_option("--values", o.weight_values, "Comma-separated weights")->delimiter(',');
  hf->add_option("--radix", o.radix, "Code alphabet size")->check(CLI::Range(2, 36));

  auto* ben = app.add_subcommand("benford", "First-digit distributions");
  ben->add_flag("--table5", o.table5, "Bases 3..10");
  ben->add_option("--base", o.benford_base, "Number base (>= 3)");
  ben->add_flag("--identities", o.identities, "Check the logarithmic digit identities");
  ben->add_flag("--compare", o.compare, "Binary vs ternary Huffman cost of the first digits");

  auto* log = app.add_subcommand("logic", "Kleene three-valued logic");
  log->add_flag("--table6", o.table6, "NOT / OR / AND tables");
  log->add_flag("--table8", o.table8, "Photon measurement table");
  auto* ev = log->add_subcommand("eval", "Evaluate an expression");
  ev->add_option("expression", o.expression, "Expression text")->required();
  ev->add_option("--bind", o.binds, "NAME=T|U|F or $NAME=INT|NULL (repeatable)");
  auto* tab = log->add_subcommand("table", "Truth table of an expression over its variables");
  tab->add_option("expression", o.expression, "Expression text")->required();

  auto* rep = app.add_subcommand("report", "Every reproduction plus the discrepancy list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eff) {
      run_efficiency(o);
    } else if (*dig) {
      run_digits(o);
    } else if (*cod) {
      if (*en) {
        run_enum(o);
      } else if (*hf) {
        run_huffman(o);
      } else {
        run_codes_presets(o);
      }
    } else if (*ben) {
      run_benford(o);
    } else if (*log) {
      if (*ev) {
        run_eval(o);
      } else if (*tab) {
        run_table(o);
      } else {
        run_logic_presets(o);
      }
    } else if (*rep) {
      std::cout << trinary::report::full_report(output_format(o));
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const trinary::ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
