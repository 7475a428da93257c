#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace casimir::cli {

/// Cell text for unavailable quantities.
inline constexpr const char* kNA = "NA";

/// 12 significant digits, '.' decimal separator, independent of the locale.
std::string format_number(double v);
std::string format_optional(const std::optional<double>& v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// Comma-separated, '\n' line endings, header first.
void write_csv(std::ostream& os, const CsvTable& table);
std::string to_csv(const CsvTable& table);

}  // namespace casimir::cli
