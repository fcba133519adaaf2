#include "gnls/initial_data.hpp"

#include <cmath>

#include "gnls/errors.hpp"
#include "gnls/norms.hpp"
#include "gnls/rng.hpp"

namespace gnls {

Field plane_wave(const GridSpec& grid, int k, complexd amplitude) {
  cvec v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double phase = grid.dxi() * k * grid.coords(i)[0];
    v[i] = amplitude * complexd(std::cos(phase), std::sin(phase));
  }
  return Field::from_values(grid, std::move(v));
}

namespace {
double sech(double x) { return 1.0 / std::cosh(x); }
}  // namespace

Field sech_profile(const GridSpec& grid, double amplitude, double width) {
  cvec v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = grid.coords(i);
    double val = sech(x[0] / width);
    if (grid.dim == 2) val *= sech(x[1] / width);
    v[i] = amplitude * val;
  }
  return Field::from_values(grid, std::move(v));
}

Field gaussian_profile(const GridSpec& grid, double width) {
  cvec v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = grid.coords(i);
    const double r2 = x[0] * x[0] + x[1] * x[1];
    v[i] = std::exp(-r2 / (2.0 * width * width));
  }
  return Field::from_values(grid, std::move(v));
}

Field random_gevrey(const GridSpec& grid, double sigma_star,
                    std::uint64_t seed) {
  if (!(sigma_star > 0.0))
    throw InvalidArgument("random_gevrey: sigma_star must be positive");
  Rng rng(seed);
  cvec c(grid.size());
  const int cut = grid.n / 4;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k1 = grid.wavenumber(static_cast<int>(grid.dim == 2 ? i / grid.n : i));
    const int k2 = grid.dim == 2 ? grid.wavenumber(static_cast<int>(i % grid.n)) : 0;
    // Draw in a fixed order so the stream is independent of band membership.
    const complexd g = rng.complex_gaussian();
    if (std::abs(k1) > cut || std::abs(k2) > cut) continue;
    const double w =
        std::exp(-sigma_star * grid.xi_l1(i)) / (1.0 + grid.xi_sq(i));
    c[i] = g * w;
  }
  Field f = Field::from_spectrum(grid, std::move(c));
  const double h1 = gevrey_sobolev_norm(f, {0.0, 1.0});
  if (h1 == 0.0) throw DegenerateInput("random_gevrey: drew the zero field");
  return f * complexd(1.0 / h1, 0.0);
}

Field constructed_decay(const GridSpec& grid, double rate, int k_cut) {
  cvec c(grid.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k1 = grid.wavenumber(static_cast<int>(grid.dim == 2 ? i / grid.n : i));
    const int k2 = grid.dim == 2 ? grid.wavenumber(static_cast<int>(i % grid.n)) : 0;
    if (std::abs(k1) > k_cut || std::abs(k2) > k_cut) continue;
    c[i] = std::exp(-rate * grid.xi_l1(i));
  }
  return Field::from_spectrum(grid, std::move(c));
}

}  // namespace gnls
