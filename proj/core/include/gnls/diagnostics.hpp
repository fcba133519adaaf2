#pragma once

#include <utility>
#include <vector>

#include "gnls/field.hpp"
#include "gnls/norms.hpp"

namespace gnls {

/// Result of the spectrum-decay radius fit.
struct RadiusFit {
  double sigma_est = 0.0;  // estimated strip half-width
  int k_min = 0;           // wavevector band used (inclusive magnitudes)
  int k_max = 0;
  double residual = 0.0;  // rms residual of the linear fit in log space
  bool saturated = false;  // decay faster than the grid can resolve
};

struct RadiusFitConfig {
  double k_min_frac = 1.0 / 16.0;  // drop |k| < n * k_min_frac (lowest octave)
  double noise_floor_rel = 1e-12;  // drop |c_k| below this times max |c_k|
  int min_points = 4;
  double sigma_max = 0.0;  // cap; 0 means use box_len / 4
  // A log-spectrum this concave over the band is super-exponential decay:
  // report it as saturated instead of pretending a finite radius.
  double curvature_threshold = 0.05;
};

/// Constants of the lifespan and schedule formulas.
struct ScheduleParams {
  double c0 = 0.1;   // lifespan constant
  double C_p = 1.0;  // almost-conservation constant
  double eps = 0.0;  // the "minus" in the lifespan exponent 2(p-1)-eps
};

/// Sobolev indices (s0, s1) entering the multilinear estimates:
///   d=1: s0 = (p-3)/(2(p-1)),  s1 = (p-5)/(2(p-2))
///   d=2: s0 = (p-2)/(p-1),     s1 = (p-3)/(p-2)
/// Requires p odd >= 3 and d in {1,2}; always s1 <= s0 <= 1.
std::pair<double, double> critical_indices(int p, int d);

/// A_sigma = ||u||^2_{G^{sigma,1}} + (2/(p+1)) ||e^{sigma||D||} u||^{p+1}_{L^{p+1}}.
/// At sigma = 0 this is exactly mass + energy.
double almost_conserved_quantity(const Field& field, double sigma, int p);

/// Commutator between the nonlinearity and the Gevrey weight:
///   f(v) = -( |v|^{p-1} v - e^{sigma||D||} (|e^{-sigma||D||} v|^{p-1}
///             e^{-sigma||D||} v) ).
/// Both products are dealiased; identically zero at sigma = 0.
Field gevrey_commutator(const Field& v, double sigma, int p);

/// Least-squares slope of log ||f(v)||_{L^2} against log sigma over
/// `sigma_list` (needs >= 3 values spanning >= 2 decades).  Expected ~1 for
/// generic smooth v; throws DegenerateInput when the commutator vanishes for
/// every sigma.
double commutator_sigma_slope(const Field& v, int p,
                              const std::vector<double>& sigma_list);

/// Reads the analyticity radius off the spectrum: least-squares fit of
/// log |c_k| against -||xi_k|| over the usable band.  In 2d the fit runs per
/// axis direction and the minimum is returned.  Throws DegenerateInput on the
/// all-zero field.
RadiusFit estimate_radius(const Field& field, const RadiusFitConfig& cfg = {});

/// Local-existence time c0 * (1 + norm_u0)^{-(2(p-1)-eps)}.
double lifespan(double norm_u0, int p, const ScheduleParams& sp);

/// Strip half-width sustaining [0, T]:
///   sigma = delta / (2^{p+1} C_p A0^{(p-1)/2} (1 + A0^{(p-1)/2})) * (1/T),
/// chosen so 2^{p+1} (T/delta) C_p sigma A0^{(p-1)/2} (1+A0^{(p-1)/2}) = 1.
/// Throws DegenerateInput when A0 = 0 (zero data needs no schedule).
double sigma_schedule(double T, double delta, double A0, int p,
                      const ScheduleParams& sp);

}  // namespace gnls
