#include "gnls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gnls/errors.hpp"
#include "gnls/multiplier.hpp"

namespace gnls {

double gevrey_sobolev_norm(const Field& field, const GevreyParams& gp) {
  const GridSpec& g = field.grid();
  if (gp.sigma < 0.0)
    throw InvalidArgument("gevrey_sobolev_norm: sigma must be >= 0");
  check_gevrey_guard(g, gp.sigma);
  double sum = 0.0;
  const cvec& c = field.spectrum();
  for (std::size_t i = 0; i < c.size(); ++i) {
    double w = 1.0;
    if (gp.sigma != 0.0) w *= std::exp(gp.sigma * g.xi_l1(i));
    if (gp.s != 0.0) w *= std::pow(1.0 + g.xi_sq(i), 0.5 * gp.s);
    sum += w * w * std::norm(c[i]);
  }
  return std::sqrt(std::pow(g.box_len, g.dim) * sum);
}

double lebesgue_norm(const Field& field, double q) {
  if (!(q >= 1.0)) throw InvalidArgument("lebesgue_norm: q must be >= 1");
  const cvec& v = field.values();
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
  }
  const GridSpec& g = field.grid();
  const double cell = std::pow(g.box_len / g.n, g.dim);
  double sum = 0.0;
  if (q == 2.0) {
    for (const auto& x : v) sum += std::norm(x);
  } else {
    for (const auto& x : v) sum += std::pow(std::abs(x), q);
  }
  return std::pow(cell * sum, 1.0 / q);
}

double boundary_mass_fraction(const Field& field) {
  const GridSpec& g = field.grid();
  const double quarter = 0.25 * g.box_len;
  double near = 0.0, total = 0.0;
  const cvec& v = field.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double m = std::norm(v[i]);
    total += m;
    const auto x = g.coords(i);
    const double r = g.dim == 2 ? std::max(std::abs(x[0]), std::abs(x[1]))
                                : std::abs(x[0]);
    if (r >= quarter) near += m;
  }
  return total > 0.0 ? near / total : 0.0;
}

}  // namespace gnls
