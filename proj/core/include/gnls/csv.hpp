#pragma once

#include <string>
#include <vector>

namespace gnls {

/// Ordered CSV rows with a fixed schema plus leading '#' metadata lines.
/// Cells are stored preformatted so emission is byte-deterministic.
struct ResultTable {
  std::string experiment;
  std::vector<std::string> metadata;  // written as "# <line>"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  std::string to_csv() const;
  void save(const std::string& path) const;
};

/// Floats are printed with 17 significant digits ("%.17g", C locale).
std::string format_float(double x);
std::string format_int(long long x);

}  // namespace gnls
