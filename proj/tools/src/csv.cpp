#include "casimir/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace casimir::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return kNA;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string(kNA);
}

void write_csv(std::ostream& os, const CsvTable& table) {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i != 0) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

}  // namespace casimir::cli
