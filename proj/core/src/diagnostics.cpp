#include "gnls/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnls/errors.hpp"
#include "gnls/multiplier.hpp"
#include "gnls/nls.hpp"

namespace gnls {

std::pair<double, double> critical_indices(int p, int d) {
  validate_power(p);
  if (d != 1 && d != 2)
    throw InvalidArgument("critical_indices: d must be 1 or 2");
  double s0, s1;
  if (d == 1) {
    s0 = (p - 3.0) / (2.0 * (p - 1.0));
    s1 = (p - 5.0) / (2.0 * (p - 2.0));
  } else {
    s0 = (p - 2.0) / (p - 1.0);
    s1 = (p - 3.0) / (p - 2.0);
  }
  if (!(s1 <= s0 && s0 <= 1.0))
    throw Error("critical_indices: ordering s1 <= s0 <= 1 violated");
  return {s0, s1};
}

double almost_conserved_quantity(const Field& field, double sigma, int p) {
  validate_power(p);
  if (sigma < 0.0)
    throw InvalidArgument("almost_conserved_quantity: sigma must be >= 0");
  const double g1 = gevrey_sobolev_norm(field, {sigma, 1.0});
  const Field weighted =
      sigma == 0.0 ? field : apply_multiplier(field, GevreyExp{sigma, +1});
  const double lp = lebesgue_norm(weighted, p + 1);
  return g1 * g1 + 2.0 / (p + 1) * std::pow(lp, p + 1);
}

Field gevrey_commutator(const Field& v, double sigma, int p) {
  validate_power(p);
  if (sigma < 0.0)
    throw InvalidArgument("gevrey_commutator: sigma must be >= 0");
  if (sigma == 0.0) return Field::zero(v.grid());
  check_gevrey_guard(v.grid(), sigma);

  const Field direct = nonlinearity(v, p);
  const Field damped = apply_multiplier(v, GevreyExp{sigma, -1});
  const Field lifted =
      apply_multiplier(nonlinearity(damped, p), GevreyExp{sigma, +1});
  return (direct - lifted) * complexd(-1.0, 0.0);
}

double commutator_sigma_slope(const Field& v, int p,
                              const std::vector<double>& sigma_list) {
  if (sigma_list.size() < 3)
    throw InvalidArgument("commutator_sigma_slope: need >= 3 sigma values");
  const auto [lo, hi] =
      std::minmax_element(sigma_list.begin(), sigma_list.end());
  if (!(*lo > 0.0) || *hi / *lo < 99.0)
    throw InvalidArgument(
        "commutator_sigma_slope: sigmas must be positive and span >= 2 decades");

  std::vector<double> xs, ys;
  for (double sigma : sigma_list) {
    const double norm =
        gevrey_sobolev_norm(gevrey_commutator(v, sigma, p), {0.0, 0.0});
    if (norm > 0.0) {
      xs.push_back(std::log(sigma));
      ys.push_back(std::log(norm));
    }
  }
  if (xs.size() < 2)
    throw DegenerateInput(
        "commutator_sigma_slope: commutator vanishes for the given field");

  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

namespace {

struct FitPoints {
  std::vector<double> x;  // ||xi_k||
  std::vector<double> y;  // log |c_k|
  int k_min = 0, k_max = 0;
};

// Linear least squares y ~ a + b x; returns {a, b, rms residual}.
struct LinFit {
  double a = 0.0, b = 0.0, rms = 0.0;
};

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  LinFit f;
  f.b = sxx > 0.0 ? sxy / sxx : 0.0;
  f.a = my - f.b * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.a + f.b * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

// Quadratic coefficient of the least-squares parabola through (x, y); a
// markedly negative value means the log-spectrum is concave, i.e. the decay
// is super-exponential on this band.
double quadratic_coefficient(const std::vector<double>& x,
                             const std::vector<double>& y) {
  const std::size_t n = x.size();
  double s0 = static_cast<double>(n), s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  double t0 = 0, t1 = 0, t2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i], xi2 = xi * xi;
    s1 += xi;
    s2 += xi2;
    s3 += xi2 * xi;
    s4 += xi2 * xi2;
    t0 += y[i];
    t1 += xi * y[i];
    t2 += xi2 * y[i];
  }
  // Normal equations solved by Cramer's rule; only the x^2 coefficient
  // is needed (third column of the system replaced by the moment vector).
  const double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) +
                     s2 * (s1 * s3 - s2 * s2);
  if (det == 0.0) return 0.0;
  const double dq = s0 * (s2 * t2 - t1 * s3) - s1 * (s1 * t2 - t1 * s2) +
                    t0 * (s1 * s3 - s2 * s2);
  return dq / det;
}

// Collect fit points along one axis (or the single axis in 1d).
FitPoints collect_axis(const Field& f, int axis, const RadiusFitConfig& cfg,
                       double floor_abs) {
  const GridSpec& g = f.grid();
  const cvec& c = f.spectrum();
  const int kmin = std::max(1, static_cast<int>(g.n * cfg.k_min_frac));
  FitPoints pts;
  pts.k_min = kmin;
  for (int k = -g.n / 2; k < g.n / 2; ++k) {
    if (std::abs(k) < kmin) continue;
    std::size_t idx;
    if (g.dim == 1) {
      idx = static_cast<std::size_t>(k >= 0 ? k : k + g.n);
    } else {
      const int i = k >= 0 ? k : k + g.n;
      idx = axis == 0 ? static_cast<std::size_t>(i) * g.n
                      : static_cast<std::size_t>(i);
    }
    const double mag = std::abs(c[idx]);
    if (mag <= floor_abs) continue;
    pts.x.push_back(g.dxi() * std::abs(k));
    pts.y.push_back(std::log(mag));
    pts.k_max = std::max(pts.k_max, std::abs(k));
  }
  return pts;
}

RadiusFit fit_axis(const Field& f, int axis, const RadiusFitConfig& cfg,
                   double floor_abs, double sigma_max) {
  FitPoints pts = collect_axis(f, axis, cfg, floor_abs);
  RadiusFit out;
  out.k_min = pts.k_min;
  out.k_max = pts.k_max;
  if (static_cast<int>(pts.x.size()) < cfg.min_points) {
    out.saturated = true;
    out.sigma_est = sigma_max;
    return out;
  }
  const LinFit lf = linear_fit(pts.x, pts.y);
  const double q = quadratic_coefficient(pts.x, pts.y);
  out.residual = lf.rms;
  out.sigma_est = std::max(0.0, -lf.b);
  if (q <= -cfg.curvature_threshold || out.sigma_est >= sigma_max) {
    out.saturated = true;
    out.sigma_est = sigma_max;
  }
  return out;
}

}  // namespace

RadiusFit estimate_radius(const Field& field, const RadiusFitConfig& cfg) {
  const GridSpec& g = field.grid();
  double max_mag = 0.0;
  for (const auto& x : field.spectrum()) max_mag = std::max(max_mag, std::abs(x));
  if (max_mag == 0.0)
    throw DegenerateInput("estimate_radius: all-zero field");

  const double floor_abs = cfg.noise_floor_rel * max_mag;
  const double sigma_max = cfg.sigma_max > 0.0 ? cfg.sigma_max : g.box_len / 4.0;

  RadiusFit best = fit_axis(field, 0, cfg, floor_abs, sigma_max);
  if (g.dim == 2) {
    const RadiusFit other = fit_axis(field, 1, cfg, floor_abs, sigma_max);
    // The strip has one half-width per coordinate; the uniform radius is the
    // smaller of the per-axis reads.  A saturated axis gives no constraint.
    if (best.saturated) {
      best = other;
    } else if (!other.saturated && other.sigma_est < best.sigma_est) {
      best = other;
    }
  }
  return best;
}

double lifespan(double norm_u0, int p, const ScheduleParams& sp) {
  validate_power(p);
  if (norm_u0 < 0.0) throw InvalidArgument("lifespan: norm must be >= 0");
  if (!(sp.c0 > 0.0)) throw InvalidArgument("lifespan: c0 must be positive");
  return sp.c0 * std::pow(1.0 + norm_u0, -(2.0 * (p - 1) - sp.eps));
}

double sigma_schedule(double T, double delta, double A0, int p,
                      const ScheduleParams& sp) {
  validate_power(p);
  if (!(T > 0.0) || !(delta > 0.0))
    throw InvalidArgument("sigma_schedule: T and delta must be positive");
  if (!(sp.C_p > 0.0))
    throw InvalidArgument("sigma_schedule: C_p must be positive");
  if (A0 < 0.0) throw InvalidArgument("sigma_schedule: A0 must be >= 0");
  if (A0 == 0.0)
    throw DegenerateInput(
        "sigma_schedule: A0 = 0 (zero data is globally analytic)");
  const double ap = std::pow(A0, 0.5 * (p - 1));
  return delta / (std::pow(2.0, p + 1) * sp.C_p * ap * (1.0 + ap)) / T;
}

}  // namespace gnls
