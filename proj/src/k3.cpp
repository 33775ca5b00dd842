#include "trinary/k3.hpp"

#include <algorithm>
#include <cctype>

#include "trinary/error.hpp"

namespace trinary::k3 {
namespace {

constexpr std::size_t index_of(Trit t) { return static_cast<std::size_t>(to_int(t) + 1); }

constexpr std::array<std::array<Trit, 3>, 3> kMeasurement{{
    {Trit::False, Trit::Unknown, Trit::True},
    {Trit::Unknown, Trit::True, Trit::Unknown},
    {Trit::True, Trit::Unknown, Trit::True},
}};

}  // namespace

Trit from_int(int value) {
  if (value < -1 || value > 1) throw DomainError("trit must be -1, 0 or 1, got " + std::to_string(value));
  return static_cast<Trit>(value);
}

Trit parse_trit(const std::string& text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (s == "T" || s == "TRUE" || s == "1" || s == "+1") return Trit::True;
  if (s == "U" || s == "UNKNOWN" || s == "0") return Trit::Unknown;
  if (s == "F" || s == "FALSE" || s == "-1") return Trit::False;
  throw DomainError("not a truth value: '" + text + "' (use T, U, F or 1, 0, -1)");
}

Trit quantum_measure(Trit photon, Trit filter) noexcept {
  return kMeasurement[index_of(photon)][index_of(filter)];
}

std::string to_string(Trit t) { return std::to_string(to_int(t)); }

}  // namespace trinary::k3
