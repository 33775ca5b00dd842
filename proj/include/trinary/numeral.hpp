#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace trinary::numeral {

/// Compact positional numeral: most significant digit first, no leading zeros.
struct Numeral {
  int base = 2;
  std::vector<int> digits;

  std::uint64_t value() const;
  std::string to_string() const;  // digits >= 10 are written as letters
};

/// Digit counts over the range 1..N for one base. range_count = total_digits * base.
struct DigitTally {
  std::uint64_t n = 0;
  int base = 2;
  std::uint64_t total_digits = 0;
  std::uint64_t range_count = 0;
};

Numeral to_numeral(std::uint64_t n, int base);

/// floor(log_base n) + 1, computed without floating point.
int digit_count(std::uint64_t n, int base);

/// Sum of digit_count(j, base) for j = 1..N. Counts whole digit-length
/// blocks, so it runs in O(log N).
std::uint64_t total_digits(std::uint64_t n, int base);

/// Series form for N = base^n - 1: sum over j = 1..n of j (base^j - base^(j-1)).
std::uint64_t total_digits_series(int n, int base);

/// Closed form for N = base^n - 1:
/// (n (base^(n+1) - base^n) - base^n + 1) / (base - 1).
/// Exact, with checked arithmetic: throws OverflowError instead of wrapping.
std::uint64_t total_digits_closed(int n, int base);

DigitTally range_count(std::uint64_t n, int base);

/// Tallies for every base, ascending by range count; ties keep the smaller
/// base first. The winner is front().
std::vector<DigitTally> best_base(std::uint64_t n, std::span<const int> bases);

}  // namespace trinary::numeral
