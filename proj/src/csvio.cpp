#include "chaosfoundry/csvio.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace chaosfoundry {

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return columns[i];
  throw std::runtime_error("csv: no column named '" + name + "'");
}

void write_csv(const std::string& path, const CsvTable& table) {
  if (table.header.size() != table.columns.size())
    throw std::invalid_argument("csv: header/column count mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
  out << std::setprecision(17);
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << table.header[i];
  out << '\n';
  const std::size_t n = table.rows();
  for (const auto& col : table.columns)
    if (col.size() != n) throw std::invalid_argument("csv: ragged columns");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << table.columns[c][r];
    out << '\n';
  }
  if (!out) throw std::runtime_error("csv: write failed for '" + path + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: '" + path + "' is empty");
  {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) table.header.push_back(field);
  }
  table.columns.resize(table.header.size());
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::size_t c = 0;
    while (std::getline(ss, field, ',')) {
      if (c >= table.columns.size())
        throw std::runtime_error("csv: too many fields at " + path + ":" + std::to_string(lineno));
      try {
        table.columns[c].push_back(std::stod(field));
      } catch (const std::exception&) {
        throw std::runtime_error("csv: non-numeric field '" + field + "' at " + path + ":" +
                                 std::to_string(lineno));
      }
      ++c;
    }
    if (c != table.columns.size())
      throw std::runtime_error("csv: short row at " + path + ":" + std::to_string(lineno));
  }
  return table;
}

}  // namespace chaosfoundry
