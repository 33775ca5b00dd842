#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trinary::format {

enum class OutputFormat { Csv, Markdown, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Column-major-agnostic string table; every row has columns.size() cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  friend bool operator==(const Table&, const Table&) = default;
};

/// csv: RFC 4180 (CRLF-free, header first, quotes only where needed).
/// markdown: pipe table. json: array of objects; cells that read as plain
/// numbers are emitted as JSON numbers.
std::string render(const Table& table, OutputFormat format);

/// Inverse of render(..., Csv). Throws DomainError on unbalanced quotes.
Table parse_csv(std::string_view text);

/// Fixed-point with `decimals` digits.
std::string fixed(double value, int decimals = 3);

}  // namespace trinary::format
