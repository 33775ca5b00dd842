#include "trinary/format.hpp"

#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "trinary/error.hpp"

namespace trinary::format {
namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool plain_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

nlohmann::ordered_json json_cell(const std::string& cell) {
  double value = 0.0;
  if (!plain_number(cell, value)) return cell;
  long long as_int = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), as_int);
  if (ec == std::errc() && ptr == cell.data() + cell.size()) return as_int;
  return value;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "markdown" || name == "md") return OutputFormat::Markdown;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw DomainError("row has " + std::to_string(row.size()) + " cells, table has " +
                      std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string render(const Table& table, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::Csv: {
      auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) out += ',';
          out += csv_cell(cells[i]);
        }
        out += '\n';
      };
      line(table.columns);
      for (const auto& r : table.rows) line(r);
      break;
    }
    case OutputFormat::Markdown: {
      auto line = [&out](const std::vector<std::string>& cells) {
        out += '|';
        for (const auto& c : cells) {
          std::string escaped;
          for (char ch : c) {
            if (ch == '|') escaped += '\\';
            escaped += ch;
          }
          out += ' ' + escaped + " |";
        }
        out += '\n';
      };
      line(table.columns);
      out += '|';
      for (std::size_t i = 0; i < table.columns.size(); ++i) out += " --- |";
      out += '\n';
      for (const auto& r : table.rows) line(r);
      break;
    }
    case OutputFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < r.size(); ++i) obj[table.columns[i]] = json_cell(r[i]);
        arr.push_back(std::move(obj));
      }
      out = arr.dump(2) + "\n";
      break;
    }
  }
  return out;
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      cell += c;
    }
  }
  if (quoted) throw DomainError("unterminated quoted CSV field");
  if (any || !cell.empty() || !record.empty()) {
    record.push_back(std::move(cell));
    records.push_back(std::move(record));
  }

  Table table;
  if (records.empty()) return table;
  table.columns = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) table.add_row(std::move(records[r]));
  return table;
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace trinary::format
