#pragma once

#include "gnls/field.hpp"

namespace gnls {

/// Gevrey-Sobolev weight parameters: strip half-width sigma >= 0 and
/// Sobolev index s.
struct GevreyParams {
  double sigma = 0.0;
  double s = 0.0;
};

/// || e^{sigma ||D||} <D>^s f ||_{L^2} under the series convention:
/// box_len^{dim/2} * (sum_k e^{2 sigma ||xi_k||} <xi_k>^{2s} |c_k|^2)^{1/2}.
/// sigma = s = 0 reduces to the L^2 norm.  Throws OverflowGuard as
/// apply_multiplier would.
double gevrey_sobolev_norm(const Field& field, const GevreyParams& gp);

/// Riemann-sum L^q norm ((box_len/n)^{dim} sum |f(x_j)|^q)^{1/q};
/// q = infinity gives the max modulus.  Requires q >= 1.
double lebesgue_norm(const Field& field, double q);

/// Fraction of the L^2 mass lying within box_len/4 of the boundary
/// (i.e. where max_i |x_i| >= box_len/4).  Returns 0 for the zero field.
double boundary_mass_fraction(const Field& field);

}  // namespace gnls
