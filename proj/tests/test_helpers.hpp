#pragma once

#include <cmath>

#include "gnls/field.hpp"
#include "gnls/norms.hpp"
#include "gnls/rng.hpp"

namespace gnls_test {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

/// L^2 distance between fields relative to the norm of `ref`.
inline double rel_l2(const gnls::Field& got, const gnls::Field& ref) {
  const double diff = gnls::gevrey_sobolev_norm(got - ref, {0.0, 0.0});
  const double base = gnls::gevrey_sobolev_norm(ref, {0.0, 0.0});
  return diff / std::max(1e-300, base);
}

inline double max_abs_diff(const gnls::cvec& a, const gnls::cvec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Random band-limited field with gaussian coefficients inside |k| <= n/4.
inline gnls::Field random_band_limited(const gnls::GridSpec& g,
                                       std::uint64_t seed,
                                       double decay = 0.0) {
  gnls::Rng rng(seed);
  gnls::cvec c(g.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k1 = g.wavenumber(static_cast<int>(g.dim == 2 ? i / g.n : i));
    const int k2 = g.dim == 2 ? g.wavenumber(static_cast<int>(i % g.n)) : 0;
    const auto z = rng.complex_gaussian();
    if (std::abs(k1) > g.n / 4 || std::abs(k2) > g.n / 4) continue;
    c[i] = z * std::exp(-decay * g.xi_l1(i));
  }
  return gnls::Field::from_spectrum(g, std::move(c));
}

}  // namespace gnls_test
