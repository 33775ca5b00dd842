#include "trinary/radix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trinary/error.hpp"

namespace trinary::radix {

const char* to_string(Unit unit) { return unit == Unit::Nats ? "nats" : "bits"; }

double efficiency(double base, Unit unit) {
  if (!std::isfinite(base) || base <= 1.0) {
    throw DomainError("efficiency requires base > 1, got " + std::to_string(base));
  }
  const double nats = std::log(base) / base;
  return unit == Unit::Nats ? nats : nats / std::numbers::ln2;
}

OptimalBase optimal_base() { return {std::numbers::e, 1.0 / std::numbers::e}; }

double capacity(double base) {
  if (!std::isfinite(base) || base < 2.0) {
    throw DomainError("capacity requires base >= 2, got " + std::to_string(base));
  }
  return std::log(base);
}

double capacity_shortfall(double base) { return 1.0 - capacity(base); }

std::vector<EfficiencyPoint> efficiency_curve(double b_min, double b_max, double step,
                                              Unit unit) {
  if (!(std::isfinite(b_min) && std::isfinite(b_max) && std::isfinite(step))) {
    throw UsageError("efficiency curve bounds must be finite");
  }
  if (!(b_min > 1.0 && b_min < b_max)) {
    throw UsageError("efficiency curve needs 1 < from < to");
  }
  if (!(step > 0.0)) throw UsageError("efficiency curve step must be positive");

  // Index-based sampling so that accumulated rounding never drops the endpoint.
  const double span = (b_max - b_min) / step;
  const auto count = static_cast<long long>(std::floor(span + 1e-9)) + 1;
  std::vector<EfficiencyPoint> points;
  points.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    const double b = b_min + static_cast<double>(i) * step;
    points.push_back({b, efficiency(b, unit), unit});
  }
  return points;
}

}  // namespace trinary::radix
