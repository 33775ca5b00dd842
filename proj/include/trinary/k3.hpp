#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace trinary::k3 {

/// Kleene truth value, stored numerically as -1 / 0 / +1.
enum class Trit : std::int8_t { False = -1, Unknown = 0, True = 1 };

inline constexpr std::array<Trit, 3> kAllTrits{Trit::False, Trit::Unknown, Trit::True};

constexpr int to_int(Trit t) noexcept { return static_cast<int>(t); }

/// Throws DomainError for values outside {-1, 0, 1}.
Trit from_int(int value);

/// Accepts -1/0/1, +1, and the aliases F/U/T (case-insensitive).
Trit parse_trit(const std::string& text);

constexpr Trit k3_not(Trit a) noexcept { return static_cast<Trit>(-to_int(a)); }
constexpr Trit k3_and(Trit a, Trit b) noexcept { return to_int(a) < to_int(b) ? a : b; }
constexpr Trit k3_or(Trit a, Trit b) noexcept { return to_int(a) > to_int(b) ? a : b; }

/// Published photon-polarisation truth table, rows by photon state
/// (H = -1, D = 0, V = +1), columns by filter orientation in the same order.
/// Stored verbatim; the centre cell is printed as "1" and kept as +1.
Trit quantum_measure(Trit photon, Trit filter) noexcept;

/// "-1", "0", "1".
std::string to_string(Trit t);

}  // namespace trinary::k3
