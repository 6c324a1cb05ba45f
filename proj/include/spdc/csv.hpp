#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace spdc {

/// Formats with 17 significant digits ("%.17g"), enough for an exact
/// double round trip.
inline std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

struct CsvTable {
  std::vector<std::string> header_lines;  // emitted with a "#" prefix
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// "#"-prefixed header block, comma separators, "\n" line endings.
inline void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& line : table.header_lines) out << "# " << line << "\n";
  for (size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_double(row[c]);
    }
    out << "\n";
  }
}

}  // namespace spdc
