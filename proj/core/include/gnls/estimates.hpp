#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnls/spacetime.hpp"

namespace gnls {

/// The space-time inequalities probed by the Monte-Carlo harness, named by
/// what they bound.
enum class EstimateId {
  strichartz,            // mixed L^q_t L^r_x vs X^{0,b}
  multilinear_l2,        // p-fold product in L^2 vs X^{s0,b} factors
  multilinear_dual,      // p-fold product in X^{0,-b} vs X^{s1,b} factors
  multilinear_gevrey,    // p-fold product in X^{sigma,1,0} vs X^{sigma,1,b}
  commutator_l2,         // Gevrey commutator in L^2, linear in sigma
  commutator_grad_dual,  // gradient of the commutator in X^{0,-b}
  trace_embedding,       // sup_t G^{sigma,s} trace vs X^{sigma,s,b}
};

std::string to_string(EstimateId id);
EstimateId estimate_from_string(const std::string& name);
std::vector<EstimateId> all_estimates();

struct EstimateParams {
  int p = 5;
  double b = 0.6;
  double sigma = 0.1;      // gevrey weight where applicable
  double s = 1.0;          // trace embedding Sobolev index
  double q = 8.0, r = 4.0; // strichartz exponents
};

/// Number of input fields one sample consumes: p for the product estimates,
/// one otherwise.
int estimate_arity(EstimateId id, int p);

/// Conjugation pattern of the NLS nonlinearity |u|^{p-1} u: (p+1)/2 plain
/// factors followed by (p-1)/2 conjugated ones.
std::vector<bool> nls_conjugation_pattern(int p);

/// LHS/RHS for one sample, exactly as the inequalities read; nullopt when the
/// RHS vanishes.  Throws InvalidArgument when inputs.size() != arity.
std::optional<double> estimate_ratio(EstimateId id,
                                     const std::vector<SpaceTimeField>& inputs,
                                     const std::vector<bool>& conj_pattern,
                                     const EstimateParams& par);

struct EstimateReport {
  std::string estimate_id;
  int n = 0;  // spatial resolution the samples lived on
  int sample_count = 0;
  int excluded_zero_rhs = 0;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  EstimateParams params;
};

/// Evaluates every sample (each inner vector must match the arity) and
/// aggregates the ratio statistics.  Throws when all samples have RHS = 0.
EstimateReport check_estimate(EstimateId id,
                              const std::vector<std::vector<SpaceTimeField>>& samples,
                              const std::vector<bool>& conj_pattern,
                              const EstimateParams& par);

/// Space-time version of the Gevrey commutator (spatial weights slice-wise,
/// products dealiased in both axes).
SpaceTimeField st_gevrey_commutator(const SpaceTimeField& v, double sigma,
                                    int p);

/// Random band-limited slab fields: spectrum ~ complex gaussian times
/// e^{-(|xi|/xi0 + |tau|/tau0)} inside |k| <= n/4, |j| <= m/4, then a smooth
/// time bump supported in [0.1, 0.9] t_len so the periodization wrap-around
/// is negligible.  Deterministic in `seed`.
struct SamplerConfig {
  GridSpec grid;
  int m = 64;
  double t_len = 6.283185307179586;
  double xi0_frac = 0.25;   // xi0 = xi0_frac * max resolved |xi|
  double tau0_frac = 0.25;  // tau0 = tau0_frac * max resolved |tau|
};
SpaceTimeField sample_slab_field(const SamplerConfig& cfg, std::uint64_t seed);

class Rng;
/// Draws the next field from an existing stream (several per trial).
SpaceTimeField sample_slab_field(const SamplerConfig& cfg, Rng& rng);

/// Smooth bump supported on (lo, hi) fractions of [0, t_len]; exp(1 - 1/(1-s^2))
/// on the interior, identically zero outside.
double time_bump(double t, double t_len, double lo = 0.1, double hi = 0.9);

}  // namespace gnls
