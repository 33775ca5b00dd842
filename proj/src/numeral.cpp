#include "trinary/numeral.hpp"

#include <algorithm>
#include <string>

#include "trinary/error.hpp"

namespace trinary::numeral {
namespace {

void check_base(int base) {
  if (base < 2) throw DomainError("base must be >= 2, got " + std::to_string(base));
}

void check_n(std::uint64_t n) {
  if (n < 1) throw DomainError("counting starts at 1; N must be >= 1");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
  if (b > a) throw OverflowError("integer underflow in subtraction");
  return a - b;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

std::uint64_t Numeral::value() const {
  std::uint64_t v = 0;
  for (int d : digits) v = checked_add(checked_mul(v, static_cast<std::uint64_t>(base)), d);
  return v;
}

std::string Numeral::to_string() const {
  std::string out;
  out.reserve(digits.size());
  for (int d : digits) out.push_back(d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10));
  return out;
}

Numeral to_numeral(std::uint64_t n, int base) {
  check_base(base);
  check_n(n);
  Numeral out{base, {}};
  const auto b = static_cast<std::uint64_t>(base);
  while (n > 0) {
    out.digits.push_back(static_cast<int>(n % b));
    n /= b;
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

int digit_count(std::uint64_t n, int base) {
  check_base(base);
  check_n(n);
  int count = 0;
  for (; n > 0; n /= static_cast<std::uint64_t>(base)) ++count;
  return count;
}

std::uint64_t total_digits(std::uint64_t n, int base) {
  check_base(base);
  check_n(n);
  const auto b = static_cast<std::uint64_t>(base);
  std::uint64_t total = 0;
  std::uint64_t lo = 1;  // smallest number with `len` digits
  for (std::uint64_t len = 1; lo <= n; ++len) {
    std::uint64_t hi = n;  // largest number with `len` digits, clipped to n
    std::uint64_t next = 0;
    const bool last_block = __builtin_mul_overflow(lo, b, &next) || next - 1 >= n;
    if (!last_block) hi = next - 1;
    total = checked_add(total, checked_mul(hi - lo + 1, len));
    if (last_block) break;
    lo = next;
  }
  return total;
}

std::uint64_t total_digits_series(int n, int base) {
  check_base(base);
  if (n < 1) throw DomainError("exponent n must be >= 1");
  const auto b = static_cast<std::uint64_t>(base);
  std::uint64_t sum = 0;
  std::uint64_t prev = 1;  // b^(j-1)
  for (int j = 1; j <= n; ++j) {
    const std::uint64_t cur = checked_mul(prev, b);
    sum = checked_add(sum, checked_mul(static_cast<std::uint64_t>(j), cur - prev));
    prev = cur;
  }
  return sum;
}

std::uint64_t total_digits_closed(int n, int base) {
  check_base(base);
  if (n < 1) throw DomainError("exponent n must be >= 1");
  const auto b = static_cast<std::uint64_t>(base);
  const std::uint64_t bn = checked_pow(b, n);
  const std::uint64_t bn1 = checked_mul(bn, b);
  const std::uint64_t numerator =
      checked_add(checked_sub(checked_mul(static_cast<std::uint64_t>(n), bn1 - bn), bn), 1);
  return numerator / (b - 1);
}

DigitTally range_count(std::uint64_t n, int base) {
  const std::uint64_t s = total_digits(n, base);
  return {n, base, s, checked_mul(s, static_cast<std::uint64_t>(base))};
}

std::vector<DigitTally> best_base(std::uint64_t n, std::span<const int> bases) {
  if (bases.empty()) throw DomainError("best_base needs at least one base");
  std::vector<DigitTally> ranking;
  ranking.reserve(bases.size());
  for (int b : bases) ranking.push_back(range_count(n, b));
  std::stable_sort(ranking.begin(), ranking.end(), [](const DigitTally& a, const DigitTally& b) {
    if (a.range_count != b.range_count) return a.range_count < b.range_count;
    return a.base < b.base;
  });
  return ranking;
}

}  // namespace trinary::numeral
