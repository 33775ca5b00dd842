#include "trinary/rational.hpp"

#include <cstdio>

namespace trinary {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string format_rational(const Rational& r, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, to_double(r));
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  std::string exact = num.str();
  if (den != 1) exact += "/" + den.str();
  return exact + " (" + buf + ")";
}

}  // namespace trinary
