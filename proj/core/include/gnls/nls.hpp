#pragma once

#include <optional>
#include <vector>

#include "gnls/diagnostics.hpp"
#include "gnls/field.hpp"

namespace gnls {

/// iu_t + Laplacian u = |u|^{p-1} u, defocusing, p odd >= 3.
struct NlsParams {
  int p = 5;
};

void validate_power(int p);

/// |u|^{p-1} u evaluated on a grid zero-padded by ceil((p+1)/2) per axis and
/// truncated back, so the degree-p product carries no aliased modes.
Field nonlinearity(const Field& field, int p);

/// Alias-free pointwise product of the given fields (conjugating those
/// flagged), zero-padded by ceil((q+1)/2) per axis for q factors.
Field dealiased_product(const std::vector<Field>& fields,
                        const std::vector<bool>& conjugate);

/// M(u) = ||u||^2_{L^2}.
double mass(const Field& field);

/// E(u) = ||grad u||^2_{L^2} + (2/(p+1)) ||u||^{p+1}_{L^{p+1}}.
double energy(const Field& field, int p);

/// One Strang step: half nonlinear phase, full free flow, half nonlinear
/// phase.  Mass is preserved to roundoff by construction.  Throws Error on
/// non-finite output (instability; reduce dt).
Field step_splitstep(const Field& field, double dt, int p);

struct PicardParams {
  int max_iter = 50;
  double tol = 1e-10;    // fixed-point residual in the G^{0,1} norm
  int quad_points = 9;   // trapezoid nodes for the Duhamel integral
  double b = 0.6;        // 1/2 < b < b_prime < 1
  double b_prime = 0.8;
  // Contraction threshold dt_max = c0 (1 + ||u0||_{G^{0,1}})^{-2(p-1)}.
  // The default is permissive; lower it to make the threshold bite.
  double contraction_c0 = 1e4;
};

struct PicardStats {
  int iterations = 0;
  std::vector<double> residuals;  // successive iterate differences in G^{0,1}
};

/// One Duhamel/Picard step: iterates
///   u^{(n)}(dt) = e^{i dt Lap} u0 - i int_0^dt e^{i(dt-s) Lap}
///                 |u^{(n-1)}(s)|^{p-1} u^{(n-1)}(s) ds
/// with the integral on fixed trapezoid nodes, until successive iterates
/// differ by <= tol in G^{0,1}.  Throws InvalidArgument when dt exceeds the
/// contraction threshold and NoConvergence when max_iter is exhausted.
Field step_duhamel_picard(const Field& field, double dt, int p,
                          const PicardParams& pp,
                          PicardStats* stats = nullptr);

enum class Method { splitstep, picard };

struct DiagnosticsConfig {
  int stride = 1;                  // sample every `stride` steps
  std::vector<double> sigma_list;  // sigmas for A_sigma columns
  bool compute_radius = false;
  RadiusFitConfig fit;
  PicardParams picard;
};

struct TrajectorySample {
  double t = 0.0;
  Field field;
  double mass = 0.0;
  double energy = 0.0;
  std::vector<double> A_sigma;  // one per DiagnosticsConfig::sigma_list entry
  RadiusFit radius;             // valid when compute_radius was set
};

struct Trajectory {
  int p = 0;
  std::vector<TrajectorySample> samples;
  bool boundary_warning = false;  // mass reached within box_len/4 of the edge
};

/// Evolves to time T with fixed step dt (a shorter final step if T is not a
/// multiple), sampling diagnostics at the configured stride.  Deterministic
/// for fixed inputs.  T = 0 yields the single sample (0, u0).
Trajectory evolve(const Field& u0, double T, double dt, int p, Method method,
                  const DiagnosticsConfig& cfg);

}  // namespace gnls
