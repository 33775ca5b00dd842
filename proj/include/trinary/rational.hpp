#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace trinary {

using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// "p/q (d.ddd)" or "p (p.000)" for integers; `decimals` digits after the point.
std::string format_rational(const Rational& r, int decimals = 3);

}  // namespace trinary
