#include "trinary/codes.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <sstream>
#include <string>

#include "trinary/error.hpp"

namespace trinary::codes {
namespace {

void check_radix(int radix) {
  if (radix < 2) throw DomainError("radix must be >= 2, got " + std::to_string(radix));
}

}  // namespace

Codeword::Codeword(int radix, std::vector<int> digits) : radix_(radix), digits_(std::move(digits)) {
  check_radix(radix_);
  if (digits_.empty()) throw DomainError("codeword must have at least one digit");
  for (int d : digits_) {
    if (d < 0 || d >= radix_) {
      throw DomainError("digit " + std::to_string(d) + " outside radix " + std::to_string(radix_));
    }
  }
}

bool Codeword::is_prefix_of(const Codeword& other) const {
  return digits_.size() <= other.digits_.size() &&
         std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

std::string Codeword::to_string() const {
  std::string out;
  out.reserve(digits_.size());
  for (int d : digits_) out.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10));
  return out;
}

Codeword parse_codeword(const std::string& text, int radix) {
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits.push_back(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      digits.push_back(c - 'a' + 10);
    } else {
      throw DomainError(std::string("invalid codeword character '") + c + "'");
    }
  }
  return Codeword(radix, std::move(digits));
}

std::vector<std::string> CodeTable::strings() const {
  std::vector<std::string> out;
  out.reserve(codewords.size());
  for (const auto& c : codewords) out.push_back(c.to_string());
  return out;
}

std::vector<std::size_t> CodeTable::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(codewords.size());
  for (const auto& c : codewords) out.push_back(c.length());
  return out;
}

SymbolWeights::SymbolWeights(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw DomainError("need at least 2 symbols");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || w < 0.0) {
      throw DomainError("weight " + std::to_string(i) + " must be a finite nonnegative number");
    }
    total_ += w;
  }
  if (!(total_ > 0.0)) throw DomainError("weights must have a positive sum");
}

SymbolWeights SymbolWeights::uniform(std::size_t count) {
  return SymbolWeights(std::vector<double>(count, 1.0));
}

std::vector<double> SymbolWeights::probabilities() const {
  std::vector<double> p(weights_);
  for (double& x : p) x /= total_;
  return p;
}

CodeTable enumeration_code(int num_symbols, int radix) {
  check_radix(radix);
  if (num_symbols < 2) throw DomainError("enumeration code needs at least 2 symbols");

  std::vector<std::vector<int>> words{{0}, {1}};
  // At most one internal node is ever short of children.
  struct OpenNode {
    std::vector<int> prefix;
    int next_digit;
  };
  std::optional<OpenNode> open;
  if (radix > 2) open = OpenNode{{}, 2};

  for (int m = 2; m < num_symbols; ++m) {
    if (open) {
      auto word = open->prefix;
      word.push_back(open->next_digit++);
      words.push_back(std::move(word));
      if (open->next_digit == radix) open.reset();
      continue;
    }
    // Largest among the shortest: shorter beats longer, then larger digits win.
    auto victim = std::min_element(words.begin(), words.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a > b;
    });
    auto prefix = std::move(*victim);
    words.erase(victim);
    for (int d : {0, 1}) {
      auto child = prefix;
      child.push_back(d);
      words.push_back(std::move(child));
    }
    if (radix > 2) open = OpenNode{std::move(prefix), 2};
  }

  std::sort(words.begin(), words.end());
  CodeTable table{radix, {}};
  table.codewords.reserve(words.size());
  for (auto& w : words) table.codewords.emplace_back(radix, std::move(w));
  return table;
}

bool is_prefix_free(const CodeTable& table) {
  const auto& cw = table.codewords;
  for (std::size_t i = 0; i < cw.size(); ++i) {
    for (std::size_t j = 0; j < cw.size(); ++j) {
      if (i != j && cw[i].is_prefix_of(cw[j])) return false;
    }
  }
  return true;
}

Rational kraft_sum(const CodeTable& table) {
  Rational sum = 0;
  for (const auto& c : table.codewords) {
    boost::multiprecision::cpp_int denom = 1;
    for (std::size_t i = 0; i < c.length(); ++i) denom *= table.radix;
    sum += Rational(1, denom);
  }
  return sum;
}

Rational average_length(const CodeTable& table) {
  if (table.codewords.empty()) throw DomainError("average length of an empty code table");
  boost::multiprecision::cpp_int total = 0;
  for (const auto& c : table.codewords) total += c.length();
  return Rational(total, table.codewords.size());
}

double to_bits(double length, int radix) {
  check_radix(radix);
  if (!(length >= 0.0)) throw DomainError("length must be nonnegative");
  return length * std::log2(static_cast<double>(radix));
}

int dummy_count(std::size_t num_symbols, int radix) {
  check_radix(radix);
  if (num_symbols < 2) throw DomainError("need at least 2 symbols");
  const auto r1 = static_cast<std::size_t>(radix - 1);
  return static_cast<int>((r1 - (num_symbols - 1) % r1) % r1);
}

CodeTable huffman(const SymbolWeights& weights, int radix) {
  check_radix(radix);
  const std::size_t m = weights.size();
  const auto probs = weights.probabilities();

  struct Node {
    double weight;
    std::size_t min_symbol;
    std::vector<std::size_t> children;  // digit order: children[0] is digit 0
  };
  std::vector<Node> nodes;
  const std::size_t leaves = m + static_cast<std::size_t>(dummy_count(m, radix));
  nodes.reserve(2 * leaves);
  for (std::size_t i = 0; i < leaves; ++i) nodes.push_back({i < m ? probs[i] : 0.0, i, {}});

  auto heavier = [&nodes](std::size_t a, std::size_t b) {
    if (nodes[a].weight != nodes[b].weight) return nodes[a].weight > nodes[b].weight;
    return nodes[a].min_symbol > nodes[b].min_symbol;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(heavier)> queue(heavier);
  for (std::size_t i = 0; i < leaves; ++i) queue.push(i);

  while (queue.size() > 1) {
    Node parent{0.0, leaves, std::vector<std::size_t>(static_cast<std::size_t>(radix))};
    // Lightest child takes the highest digit, so padding lands on the last digits.
    for (int k = radix - 1; k >= 0; --k) {
      const std::size_t child = queue.top();
      queue.pop();
      parent.weight += nodes[child].weight;
      parent.min_symbol = std::min(parent.min_symbol, nodes[child].min_symbol);
      parent.children[static_cast<std::size_t>(k)] = child;
    }
    nodes.push_back(std::move(parent));
    queue.push(nodes.size() - 1);
  }

  std::vector<std::vector<int>> codes(m);
  struct Frame {
    std::size_t node;
    std::vector<int> prefix;
  };
  std::vector<Frame> stack{{queue.top(), {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Node& n = nodes[f.node];
    if (n.children.empty()) {
      if (f.node < m) codes[f.node] = std::move(f.prefix);
      continue;
    }
    for (std::size_t d = 0; d < n.children.size(); ++d) {
      auto p = f.prefix;
      p.push_back(static_cast<int>(d));
      stack.push_back({n.children[d], std::move(p)});
    }
  }

  CodeTable table{radix, {}};
  table.codewords.reserve(m);
  for (auto& c : codes) table.codewords.emplace_back(radix, std::move(c));
  return table;
}

double expected_length(const CodeTable& table, const SymbolWeights& weights) {
  if (table.codewords.size() != weights.size()) {
    throw DomainError("code table has " + std::to_string(table.codewords.size()) +
                      " codewords but " + std::to_string(weights.size()) + " weights");
  }
  const auto p = weights.probabilities();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * static_cast<double>(table.codewords[i].length());
  return sum;
}

std::vector<Table4Row> table4_report() {
  std::vector<Table4Row> rows;
  for (int m = 3; m <= 10; ++m) {
    const Rational trits = average_length(enumeration_code(m, 3));
    rows.push_back({m, average_length(enumeration_code(m, 2)), trits, to_bits(to_double(trits), 3)});
  }
  return rows;
}

SymbolWeights read_weights(std::istream& in) {
  std::vector<double> weights;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);

    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(w) || w < 0.0) {
      throw DomainError("line " + std::to_string(line_no) + ": expected a nonnegative decimal, got '" +
                        token + "'");
    }
    weights.push_back(w);
  }
  return SymbolWeights(std::move(weights));
}

}  // namespace trinary::codes
