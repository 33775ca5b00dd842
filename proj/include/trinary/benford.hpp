#pragma once

#include <string>
#include <vector>

namespace trinary::benford {

/// Leading-digit law P(d) = log_base(1 + 1/d) for d = 1..base-1.
struct FirstDigitDistribution {
  int base = 10;
  std::vector<double> probabilities;  // probabilities[d - 1]

  double operator()(int digit) const;
};

/// Throws DomainError for base < 3; base 2 has the single leading digit 1.
FirstDigitDistribution first_digit_probs(int base);

/// One logarithmic identity P(lhs) = sum of P(rhs...) evaluated in a base.
struct IdentityCheck {
  int lhs_digit;
  std::vector<int> rhs_digits;
  double lhs;
  double rhs;
  double residual;  // |lhs - rhs|

  std::string describe() const;  // e.g. "P(1) = P(2)+P(3)"
};

/// Every identity whose digits all exist in `base`; the rest are omitted.
std::vector<IdentityCheck> digit_identities(int base);

struct CodingCost {
  double binary_bits;
  double ternary_trits;
  double ternary_bits;
};

/// Expected Huffman code length of the first-digit distribution in radix 2
/// and radix 3. Requires base >= 4 so there are at least three symbols.
CodingCost coding_cost_comparison(int base);

}  // namespace trinary::benford
