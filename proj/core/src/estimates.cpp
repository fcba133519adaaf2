#include "gnls/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gnls/diagnostics.hpp"
#include "gnls/errors.hpp"
#include "gnls/norms.hpp"
#include "gnls/rng.hpp"

namespace gnls {

std::string to_string(EstimateId id) {
  switch (id) {
    case EstimateId::strichartz: return "strichartz";
    case EstimateId::multilinear_l2: return "multilinear_l2";
    case EstimateId::multilinear_dual: return "multilinear_dual";
    case EstimateId::multilinear_gevrey: return "multilinear_gevrey";
    case EstimateId::commutator_l2: return "commutator_l2";
    case EstimateId::commutator_grad_dual: return "commutator_grad_dual";
    case EstimateId::trace_embedding: return "trace_embedding";
  }
  return "unknown";
}

EstimateId estimate_from_string(const std::string& name) {
  for (EstimateId id : all_estimates())
    if (to_string(id) == name) return id;
  throw InvalidArgument("unknown estimate id: " + name);
}

std::vector<EstimateId> all_estimates() {
  return {EstimateId::strichartz,        EstimateId::multilinear_l2,
          EstimateId::multilinear_dual,  EstimateId::multilinear_gevrey,
          EstimateId::commutator_l2,     EstimateId::commutator_grad_dual,
          EstimateId::trace_embedding};
}

int estimate_arity(EstimateId id, int p) {
  switch (id) {
    case EstimateId::multilinear_l2:
    case EstimateId::multilinear_dual:
    case EstimateId::multilinear_gevrey:
      return p;
    default:
      return 1;
  }
}

std::vector<bool> nls_conjugation_pattern(int p) {
  std::vector<bool> pat(p, false);
  for (int j = (p + 1) / 2; j < p; ++j) pat[j] = true;
  return pat;
}

SpaceTimeField st_gevrey_commutator(const SpaceTimeField& v, double sigma,
                                    int p) {
  if (sigma == 0.0)
    return SpaceTimeField::zero(v.grid(), v.m(), v.t_len());
  const std::vector<bool> pat = nls_conjugation_pattern(p);
  const std::vector<SpaceTimeField> direct_in(p, v);
  const SpaceTimeField direct = st_dealiased_product(direct_in, pat);

  const SpaceTimeField damped =
      apply_spatial_multiplier(v, GevreyExp{sigma, -1});
  const std::vector<SpaceTimeField> damped_in(p, damped);
  const SpaceTimeField lifted = apply_spatial_multiplier(
      st_dealiased_product(damped_in, pat), GevreyExp{sigma, +1});
  return (direct - lifted) * complexd(-1.0, 0.0);
}

namespace {

std::optional<double> safe_ratio(double lhs, double rhs) {
  if (rhs == 0.0) return std::nullopt;
  return lhs / rhs;
}

}  // namespace

std::optional<double> estimate_ratio(EstimateId id,
                                     const std::vector<SpaceTimeField>& inputs,
                                     const std::vector<bool>& conj_pattern,
                                     const EstimateParams& par) {
  const int arity = estimate_arity(id, par.p);
  if (static_cast<int>(inputs.size()) != arity)
    throw InvalidArgument("estimate_ratio: expected " + std::to_string(arity) +
                          " inputs for " + to_string(id) + ", got " +
                          std::to_string(inputs.size()));
  if (arity > 1 && static_cast<int>(conj_pattern.size()) != arity)
    throw InvalidArgument("estimate_ratio: conjugation pattern size mismatch");

  const GridSpec& g = inputs.front().grid();
  const auto [s0, s1] = critical_indices(par.p, g.dim);
  const double b = par.b;
  std::optional<double> ratio;

  switch (id) {
    case EstimateId::strichartz: {
      const double lhs = mixed_lebesgue_norm(inputs[0], par.q, par.r);
      const double rhs = xsb_norm(inputs[0], {0.0, 0.0, b});
      ratio = safe_ratio(lhs, rhs);
      break;
    }
    case EstimateId::multilinear_l2: {
      const SpaceTimeField prod = st_dealiased_product(inputs, conj_pattern);
      const double lhs = xsb_norm(prod, {0.0, 0.0, 0.0});
      double rhs = xsb_norm(inputs[par.p - 1], {0.0, 0.0, b});
      for (int j = 0; j < par.p - 1; ++j)
        rhs *= xsb_norm(inputs[j], {0.0, s0, b});
      ratio = safe_ratio(lhs, rhs);
      break;
    }
    case EstimateId::multilinear_dual: {
      const SpaceTimeField prod = st_dealiased_product(inputs, conj_pattern);
      const double lhs = xsb_norm(prod, {0.0, 0.0, -b});
      double rhs = xsb_norm(inputs[par.p - 2], {0.0, 0.0, b}) *
                   xsb_norm(inputs[par.p - 1], {0.0, 0.0, b});
      for (int j = 0; j < par.p - 2; ++j)
        rhs *= xsb_norm(inputs[j], {0.0, s1, b});
      ratio = safe_ratio(lhs, rhs);
      break;
    }
    case EstimateId::multilinear_gevrey: {
      const SpaceTimeField prod = st_dealiased_product(inputs, conj_pattern);
      const double lhs = xsb_norm(prod, {par.sigma, 1.0, 0.0});
      double rhs = 1.0;
      for (int j = 0; j < par.p; ++j)
        rhs *= xsb_norm(inputs[j], {par.sigma, 1.0, b});
      ratio = safe_ratio(lhs, rhs);
      break;
    }
    case EstimateId::commutator_l2: {
      const SpaceTimeField f = st_gevrey_commutator(inputs[0], par.sigma, par.p);
      const double lhs = xsb_norm(f.conj(), {0.0, 0.0, 0.0});
      const double rhs =
          par.sigma *
          std::pow(xsb_norm(inputs[0], {0.0, s0, b}), par.p - 1) *
          xsb_norm(inputs[0], {0.0, 1.0, b});
      ratio = safe_ratio(lhs, rhs);
      break;
    }
    case EstimateId::commutator_grad_dual: {
      const SpaceTimeField f = st_gevrey_commutator(inputs[0], par.sigma, par.p);
      double lhs_sq = 0.0;
      for (int axis = 0; axis < g.dim; ++axis) {
        const SpaceTimeField df =
            apply_spatial_multiplier(f, GradientComponent{axis});
        const double a = xsb_norm(df.conj(), {0.0, 0.0, -b});
        lhs_sq += a * a;
      }
      const double lhs = std::sqrt(lhs_sq);
      const double rhs =
          par.sigma *
          std::pow(xsb_norm(inputs[0], {0.0, s1, b}), par.p - 2) *
          std::pow(xsb_norm(inputs[0], {0.0, 1.0, b}), 2);
      ratio = safe_ratio(lhs, rhs);
      break;
    }
    case EstimateId::trace_embedding: {
      double lhs = 0.0;
      for (int i = 0; i < inputs[0].m(); ++i)
        lhs = std::max(lhs, gevrey_sobolev_norm(inputs[0].slice(i),
                                                {par.sigma, par.s}));
      const double rhs = xsb_norm(inputs[0], {par.sigma, par.s, b});
      ratio = safe_ratio(lhs, rhs);
      break;
    }
  }
  return ratio;
}

EstimateReport check_estimate(
    EstimateId id, const std::vector<std::vector<SpaceTimeField>>& samples,
    const std::vector<bool>& conj_pattern, const EstimateParams& par) {
  if (samples.empty()) throw InvalidArgument("check_estimate: no samples");

  EstimateReport rep;
  rep.estimate_id = to_string(id);
  rep.n = samples.front().front().grid().n;
  rep.sample_count = static_cast<int>(samples.size());
  rep.params = par;

  for (const auto& inputs : samples) {
    const auto ratio = estimate_ratio(id, inputs, conj_pattern, par);
    if (ratio) {
      rep.ratios.push_back(*ratio);
    } else {
      ++rep.excluded_zero_rhs;
    }
  }
  if (rep.ratios.empty())
    throw DegenerateInput("check_estimate: every sample had RHS = 0");

  rep.max_ratio = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  std::vector<double> sorted = rep.ratios;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  rep.median_ratio = n % 2 ? sorted[n / 2]
                           : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  return rep;
}

double time_bump(double t, double t_len, double lo, double hi) {
  const double a = lo * t_len, c = hi * t_len;
  if (t <= a || t >= c) return 0.0;
  const double s = 2.0 * (t - a) / (c - a) - 1.0;  // in (-1, 1)
  return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

SpaceTimeField sample_slab_field(const SamplerConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  return sample_slab_field(cfg, rng);
}

SpaceTimeField sample_slab_field(const SamplerConfig& cfg, Rng& rng) {
  const GridSpec& g = cfg.grid;
  const std::size_t nsp = g.size();
  cvec spec(nsp * static_cast<std::size_t>(cfg.m));

  const double xi_max = g.dxi() * (g.n / 2);
  const double tau_max = 2.0 * std::numbers::pi / cfg.t_len * (cfg.m / 2);
  const double xi0 = cfg.xi0_frac * xi_max;
  const double tau0 = cfg.tau0_frac * tau_max;

  for (int jt = 0; jt < cfg.m; ++jt) {
    const int kt = jt < cfg.m / 2 ? jt : jt - cfg.m;
    const double tau = 2.0 * std::numbers::pi / cfg.t_len * kt;
    for (std::size_t sp = 0; sp < nsp; ++sp) {
      // Fixed draw order keeps the stream independent of band membership.
      const complexd gz = rng.complex_gaussian();
      if (std::abs(kt) > cfg.m / 4) continue;
      const int k1 = g.wavenumber(static_cast<int>(g.dim == 2 ? sp / g.n : sp));
      const int k2 = g.dim == 2 ? g.wavenumber(static_cast<int>(sp % g.n)) : 0;
      if (std::abs(k1) > g.n / 4 || std::abs(k2) > g.n / 4) continue;
      const double w = std::exp(-std::sqrt(g.xi_sq(sp)) / xi0 -
                                std::abs(tau) / tau0);
      spec[static_cast<std::size_t>(jt) * nsp + sp] = gz * w;
    }
  }

  SpaceTimeField raw =
      SpaceTimeField::from_spectrum(g, cfg.m, cfg.t_len, std::move(spec));
  cvec vals = raw.values();
  for (int i = 0; i < cfg.m; ++i) {
    const double bump = time_bump(raw.time(i), cfg.t_len);
    for (std::size_t sp = 0; sp < nsp; ++sp)
      vals[static_cast<std::size_t>(i) * nsp + sp] *= bump;
  }
  return SpaceTimeField::from_values(g, cfg.m, cfg.t_len, std::move(vals));
}

}  // namespace gnls
