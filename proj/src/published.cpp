#include "trinary/published.hpp"

#include <map>
#include <numbers>
#include <utility>

#include "trinary/error.hpp"

namespace trinary::published {

const std::array<EfficiencyRow, 10>& efficiency_table() {
  static const std::array<EfficiencyRow, 10> rows{{
      {"2", 2.0, 0.347, 0.500},
      {"e", std::numbers::e, 0.368, 0.531},
      {"3", 3.0, 0.366, 0.528},
      {"4", 4.0, 0.347, 0.500},
      {"5", 5.0, 0.322, 0.465},
      {"8", 8.0, 0.260, 0.375},
      {"10", 10.0, 0.230, 0.331},
      {"12", 12.0, 0.207, 0.298},
      {"20", 20.0, 0.150, 0.216},
      {"100", 100.0, 0.046, 0.066},
  }};
  return rows;
}

const std::array<std::uint64_t, 16>& range_counts(int base) {
  static const std::array<std::uint64_t, 16> b2{2, 6, 10, 16, 34, 42, 50, 98, 108, 208, 218, 258, 642, 656, 880, 1160};
  static const std::array<std::uint64_t, 16> b3{3, 6, 12, 18, 36, 42, 51, 105, 114, 204, 216, 264, 648, 660, 852, 1152};
  static const std::array<std::uint64_t, 16> b4{4, 8, 12, 20, 44, 52, 60, 108, 120, 220, 232, 280, 684, 700, 956, 1276};
  switch (base) {
    case 2:
      return b2;
    case 3:
      return b3;
    case 4:
      return b4;
    default:
      throw DomainError("no published range counts for base " + std::to_string(base));
  }
}

const std::vector<std::string>& enumeration_codes(int symbols, int radix) {
  static const std::map<std::pair<int, int>, std::vector<std::string>> table{
      {{3, 2}, {"0", "10", "11"}},
      {{4, 2}, {"00", "01", "10", "11"}},
      {{5, 2}, {"00", "01", "10", "110", "111"}},
      {{6, 2}, {"00", "01", "100", "101", "110", "111"}},
      {{7, 2}, {"00", "010", "011", "100", "101", "110", "111"}},
      {{8, 2}, {"000", "001", "010", "011", "100", "101", "110", "111"}},
      {{9, 2}, {"000", "001", "010", "011", "100", "101", "110", "1110", "1111"}},
      {{3, 3}, {"0", "1", "2"}},
      {{4, 3}, {"0", "1", "20", "21"}},
      {{5, 3}, {"0", "1", "20", "21", "22"}},
      {{6, 3}, {"0", "10", "11", "20", "21", "22"}},
      {{7, 3}, {"0", "10", "11", "12", "20", "21", "22"}},
      {{8, 3}, {"00", "01", "10", "11", "12", "20", "21", "22"}},
      {{9, 3}, {"00", "01", "02", "10", "11", "12", "20", "21", "22"}},
  };
  const auto it = table.find({symbols, radix});
  if (it == table.end()) {
    throw DomainError("no published code for " + std::to_string(symbols) + " symbols in radix " +
                      std::to_string(radix));
  }
  return it->second;
}

const std::array<CodingRow, 8>& coding_comparison() {
  static const std::array<CodingRow, 8> rows{{
      {3, 1.66, 1.0, 1.59},
      {4, 2.0, 1.5, 2.38},
      {5, 2.4, 1.6, 2.54},
      {6, 2.7, 1.83, 2.91},
      {7, 2.86, 1.86, 2.93},
      {8, 3.0, 2.0, 3.17},
      {9, 3.2, 2.0, 3.17},
      {10, 3.4, 2.2, 3.48},
  }};
  return rows;
}

const std::vector<double>& first_digit_probs(int base) {
  static const std::map<int, std::vector<double>> table{
      {3, {.631, .369}},
      {4, {.500, .292, .207}},
      {5, {.431, .252, .179, .139}},
      {6, {.387, .226, .161, .125, .102}},
      {7, {.356, .208, .148, .115, .094, .079}},
      {8, {.333, .195, .138, .107, .088, .074, .064}},
      {9, {.315, .185, .131, .102, .083, .070, .061, .054}},
      {10, {.301, .176, .125, .097, .079, .067, .058, .051, .046}},
  };
  const auto it = table.find(base);
  if (it == table.end()) throw DomainError("no published first-digit row for base " + std::to_string(base));
  return it->second;
}

}  // namespace trinary::published
