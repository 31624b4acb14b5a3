#pragma once

#include <string>
#include <vector>

namespace chaosfoundry {

// Minimal numeric CSV: one header row, comma separated, full double precision.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // column-major, equal lengths

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  const std::vector<double>& column(const std::string& name) const;
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

}  // namespace chaosfoundry
