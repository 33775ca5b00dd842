#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "trinary/rational.hpp"

namespace trinary::codes {

/// A nonempty digit string over the alphabet {0, ..., radix-1}.
class Codeword {
 public:
  Codeword(int radix, std::vector<int> digits);

  int radix() const noexcept { return radix_; }
  const std::vector<int>& digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }
  bool is_prefix_of(const Codeword& other) const;
  std::string to_string() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword& a, const Codeword& b) { return a.digits_ <=> b.digits_; }

 private:
  int radix_;
  std::vector<int> digits_;
};

/// Parses "0120" style digit strings (digits and lowercase letters).
Codeword parse_codeword(const std::string& text, int radix);

struct CodeTable {
  int radix = 2;
  std::vector<Codeword> codewords;  // one per symbol

  std::vector<std::string> strings() const;
  std::vector<std::size_t> lengths() const;
};

/// Nonnegative symbol weights with a positive total; at least two entries.
class SymbolWeights {
 public:
  explicit SymbolWeights(std::vector<double> weights);

  static SymbolWeights uniform(std::size_t count);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> raw() const noexcept { return weights_; }
  std::vector<double> probabilities() const;

 private:
  std::vector<double> weights_;
  double total_ = 0.0;
};

/// Equiprobable-symbol code grown one symbol at a time from {0, 1}: an
/// incomplete internal node is filled with its next digit first; otherwise
/// the numerically largest shortest codeword is split into two children.
/// Codewords are returned in lexicographic order.
CodeTable enumeration_code(int num_symbols, int radix);

bool is_prefix_free(const CodeTable& table);
Rational kraft_sum(const CodeTable& table);

/// Mean codeword length with every symbol equally likely.
Rational average_length(const CodeTable& table);

double to_bits(double length, int radix);

/// Optimal radix-ary prefix code. Zero-weight dummies are padded until
/// (m - 1) is divisible by (radix - 1) and stripped from the result, so the
/// returned codewords follow the input symbol order.
CodeTable huffman(const SymbolWeights& weights, int radix);

/// Number of zero-weight dummies huffman() adds for m symbols.
int dummy_count(std::size_t num_symbols, int radix);

double expected_length(const CodeTable& table, const SymbolWeights& weights);

struct Table4Row {
  int symbols;
  Rational binary_bits;
  Rational ternary_trits;
  double ternary_bits;
};

/// Enumeration-code averages for 3..10 equiprobable symbols.
std::vector<Table4Row> table4_report();

/// One nonnegative decimal per line; blank lines and '#' comments ignored.
/// Throws DomainError naming the line number on a malformed entry.
SymbolWeights read_weights(std::istream& in);

}  // namespace trinary::codes
