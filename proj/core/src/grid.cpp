#include "gnls/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gnls/errors.hpp"

namespace gnls {

double GridSpec::dxi() const { return 2.0 * std::numbers::pi / box_len; }

double GridSpec::xi_l1(std::size_t idx) const {
  if (dim == 1) return std::abs(frequency(static_cast<int>(idx)));
  const int i1 = static_cast<int>(idx / n);
  const int i2 = static_cast<int>(idx % n);
  return std::abs(frequency(i1)) + std::abs(frequency(i2));
}

double GridSpec::xi_sq(std::size_t idx) const {
  if (dim == 1) {
    const double f = frequency(static_cast<int>(idx));
    return f * f;
  }
  const double f1 = frequency(static_cast<int>(idx / n));
  const double f2 = frequency(static_cast<int>(idx % n));
  return f1 * f1 + f2 * f2;
}

std::array<double, 2> GridSpec::xi(std::size_t idx) const {
  if (dim == 1) return {frequency(static_cast<int>(idx)), 0.0};
  return {frequency(static_cast<int>(idx / n)),
          frequency(static_cast<int>(idx % n))};
}

std::array<double, 2> GridSpec::coords(std::size_t idx) const {
  if (dim == 1) return {coordinate(static_cast<int>(idx)), 0.0};
  return {coordinate(static_cast<int>(idx / n)),
          coordinate(static_cast<int>(idx % n))};
}

double GridSpec::max_xi_l1() const {
  // Largest |k| per axis is n/2 (the edge mode).
  const double per_axis = dxi() * (n / 2);
  return dim == 2 ? 2.0 * per_axis : per_axis;
}

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec make_grid(int dim, int n, double box_len) {
  if (dim != 1 && dim != 2)
    throw InvalidArgument("make_grid: dim must be 1 or 2, got " +
                          std::to_string(dim));
  if (n < 8 || !power_of_two(n))
    throw InvalidArgument("make_grid: n must be a power of two >= 8, got " +
                          std::to_string(n));
  if (!(box_len > 0.0))
    throw InvalidArgument("make_grid: box_len must be positive");
  return GridSpec{dim, n, box_len};
}

}  // namespace gnls
