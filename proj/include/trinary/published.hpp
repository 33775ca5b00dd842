#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace trinary::published {

// Reference values as originally printed, kept verbatim (including the cells
// that disagree with recomputation) so reports can show both side by side.

struct EfficiencyRow {
  const char* label;  // "e" for Euler's number
  double base;
  double nats;
  double bits;
};
const std::array<EfficiencyRow, 10>& efficiency_table();

inline constexpr std::array<std::uint64_t, 16> kRangeCountN{1, 2, 3, 4, 7, 8, 9, 15, 16, 26, 27, 31, 63, 64, 80, 100};

/// Printed range counts for bases 2, 3, 4, aligned with kRangeCountN.
const std::array<std::uint64_t, 16>& range_counts(int base);

/// Printed codeword sets for 3..9 symbols, radix 2 or 3.
const std::vector<std::string>& enumeration_codes(int symbols, int radix);

struct CodingRow {
  int symbols;
  double binary_bits;
  double ternary_trits;
  double ternary_bits;
};
const std::array<CodingRow, 8>& coding_comparison();

/// Printed first-digit probabilities for bases 3..10, indexed by digit - 1.
const std::vector<double>& first_digit_probs(int base);

/// Printed three-valued tables, values -1/0/1, [row A][column B] in order -1, 0, +1.
inline constexpr std::array<int, 3> kNot{1, 0, -1};
inline constexpr std::array<std::array<int, 3>, 3> kOr{{{-1, 0, 1}, {0, 0, 1}, {1, 1, 1}}};
inline constexpr std::array<std::array<int, 3>, 3> kAnd{{{-1, -1, -1}, {-1, 0, 0}, {-1, 0, 1}}};
inline constexpr std::array<std::array<int, 3>, 3> kMeasurement{{{-1, 0, 1}, {0, 1, 0}, {1, 0, 1}}};

}  // namespace trinary::published
