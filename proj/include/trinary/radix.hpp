#pragma once

#include <vector>

namespace trinary::radix {

enum class Unit { Nats, Bits };

const char* to_string(Unit unit);

struct EfficiencyPoint {
  double base;
  double value;
  Unit unit;
};

struct OptimalBase {
  double base;        // e
  double efficiency;  // 1/e nats per symbol
};

/// Per-symbol efficiency ln(b)/b, optionally converted to bits.
/// Throws DomainError unless base > 1.
double efficiency(double base, Unit unit = Unit::Nats);

OptimalBase optimal_base();

/// Information per symbol, ln(b) nats. Requires base >= 2.
double capacity(double base);

/// Distance from the optimum capacity ln(e) = 1, i.e. 1 - ln(b).
/// Positive means short of the optimum, negative means surplus.
double capacity_shortfall(double base);

/// Samples efficiency(b) for b = b_min, b_min + step, ... up to b_max
/// inclusive (within a small tolerance). Throws UsageError on a malformed range.
std::vector<EfficiencyPoint> efficiency_curve(double b_min, double b_max, double step,
                                              Unit unit = Unit::Nats);

}  // namespace trinary::radix
