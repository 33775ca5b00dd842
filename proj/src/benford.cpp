#include "trinary/benford.hpp"

#include <algorithm>
#include <cmath>

#include "trinary/codes.hpp"
#include "trinary/error.hpp"

namespace trinary::benford {
namespace {

struct IdentitySpec {
  int lhs;
  std::vector<int> rhs;
};

const std::vector<IdentitySpec>& known_identities() {
  static const std::vector<IdentitySpec> specs{
      {1, {2, 3}},
      {2, {4, 5}},
      {3, {6, 7}},
      {1, {5, 6, 7, 8, 9}},
      {2, {5, 8, 9}},
      {4, {8, 9}},
  };
  return specs;
}

}  // namespace

double FirstDigitDistribution::operator()(int digit) const {
  if (digit < 1 || digit >= base) {
    throw DomainError("digit " + std::to_string(digit) + " is not a leading digit in base " +
                      std::to_string(base));
  }
  return probabilities[static_cast<std::size_t>(digit - 1)];
}

FirstDigitDistribution first_digit_probs(int base) {
  if (base < 3) {
    throw DomainError("first-digit law needs base >= 3 (base 2 has the single leading digit 1, P(1) = 1)");
  }
  FirstDigitDistribution dist{base, {}};
  dist.probabilities.reserve(static_cast<std::size_t>(base - 1));
  const double log_base = std::log(static_cast<double>(base));
  for (int d = 1; d < base; ++d) dist.probabilities.push_back(std::log1p(1.0 / d) / log_base);
  return dist;
}

std::string IdentityCheck::describe() const {
  std::string out = "P(" + std::to_string(lhs_digit) + ") = ";
  for (std::size_t i = 0; i < rhs_digits.size(); ++i) {
    if (i) out += "+";
    out += "P(" + std::to_string(rhs_digits[i]) + ")";
  }
  return out;
}

std::vector<IdentityCheck> digit_identities(int base) {
  std::vector<IdentityCheck> out;
  if (base < 3) return out;
  const auto dist = first_digit_probs(base);
  for (const auto& spec : known_identities()) {
    int highest = spec.lhs;
    for (int d : spec.rhs) highest = std::max(highest, d);
    if (highest >= base) continue;
    double rhs = 0.0;
    for (int d : spec.rhs) rhs += dist(d);
    const double lhs = dist(spec.lhs);
    out.push_back({spec.lhs, spec.rhs, lhs, rhs, std::abs(lhs - rhs)});
  }
  return out;
}

CodingCost coding_cost_comparison(int base) {
  if (base < 4) throw DomainError("coding comparison needs base >= 4 (at least 3 leading digits)");
  const codes::SymbolWeights weights(first_digit_probs(base).probabilities);
  const double binary = codes::expected_length(codes::huffman(weights, 2), weights);
  const double trits = codes::expected_length(codes::huffman(weights, 3), weights);
  return {binary, trits, codes::to_bits(trits, 3)};
}

}  // namespace trinary::benford
