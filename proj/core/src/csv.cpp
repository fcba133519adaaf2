#include "gnls/csv.hpp"

#include <cstdio>
#include <fstream>

#include "gnls/errors.hpp"

namespace gnls {

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_int(long long x) { return std::to_string(x); }

void ResultTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size())
    throw InvalidArgument("ResultTable: row width does not match schema");
  rows.push_back(std::move(cells));
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (const auto& line : metadata) {
    out += "# ";
    out += line;
    out += '\n';
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

void ResultTable::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << to_csv();
  if (!f) throw Error("write failed: " + path);
}

}  // namespace gnls
