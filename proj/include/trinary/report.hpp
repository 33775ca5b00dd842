#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trinary/format.hpp"

namespace trinary::report {

/// A published cell that recomputation does not reproduce within the
/// precision it was printed at.
struct Discrepancy {
  std::string table;
  std::string cell;
  std::string published;
  std::string computed;
  double deviation;
};

struct Table2Cell {
  std::uint64_t n;
  int base;
  std::uint64_t total_digits;
  std::uint64_t published;
  std::uint64_t oracle;

  bool matches() const { return published == oracle; }
};

std::vector<Table2Cell> table2_cells();

/// Columns base, E_nats, E_bits at 3 decimals.
format::Table efficiency_table(std::span<const double> bases);
format::Table table1();
format::Table digits_table(std::uint64_t n, std::span<const int> bases);
format::Table table2();
format::Table table3();
format::Table table4();
format::Table benford_table(int base);
format::Table table5();
format::Table table6();
format::Table table8();
format::Table discrepancy_table(const std::vector<Discrepancy>& list);

/// Tolerances: half a unit in the last printed place for the 3-decimal
/// tables, exact for tallies, 0.01 for the 2-decimal coding table.
std::vector<Discrepancy> discrepancies();

/// Every reproduction plus the discrepancy list as one document.
std::string full_report(format::OutputFormat fmt);

/// Base label used in tables: "e" for Euler's number, shortest decimal otherwise.
std::string base_label(double base);

}  // namespace trinary::report
