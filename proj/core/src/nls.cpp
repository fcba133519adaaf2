#include "gnls/nls.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "gnls/errors.hpp"
#include "gnls/fft.hpp"
#include "gnls/multiplier.hpp"

namespace gnls {

void validate_power(int p) {
  if (p < 3 || p % 2 == 0)
    throw InvalidArgument("nonlinearity power p must be odd and >= 3, got " +
                          std::to_string(p));
}

namespace {

// Spectral interpolation onto a grid padded by `factor` per axis.  The series
// coefficients are preserved, so the padded samples evaluate the same
// trigonometric polynomial on the finer grid.
cvec pad_spectrum(const GridSpec& g, const cvec& c, int factor) {
  const int N = g.n * factor;
  if (g.dim == 1) {
    cvec out(N);
    for (int i = 0; i < g.n; ++i) {
      const int k = g.wavenumber(i);
      out[k >= 0 ? k : k + N] = c[i];
    }
    return out;
  }
  cvec out(static_cast<std::size_t>(N) * N);
  for (int i1 = 0; i1 < g.n; ++i1) {
    const int k1 = g.wavenumber(i1);
    const int j1 = k1 >= 0 ? k1 : k1 + N;
    for (int i2 = 0; i2 < g.n; ++i2) {
      const int k2 = g.wavenumber(i2);
      const int j2 = k2 >= 0 ? k2 : k2 + N;
      out[static_cast<std::size_t>(j1) * N + j2] =
          c[static_cast<std::size_t>(i1) * g.n + i2];
    }
  }
  return out;
}

cvec truncate_spectrum(const GridSpec& g, const cvec& cpad, int factor) {
  const int N = g.n * factor;
  if (g.dim == 1) {
    cvec out(g.n);
    for (int i = 0; i < g.n; ++i) {
      const int k = g.wavenumber(i);
      out[i] = cpad[k >= 0 ? k : k + N];
    }
    return out;
  }
  cvec out(g.size());
  for (int i1 = 0; i1 < g.n; ++i1) {
    const int k1 = g.wavenumber(i1);
    const int j1 = k1 >= 0 ? k1 : k1 + N;
    for (int i2 = 0; i2 < g.n; ++i2) {
      const int k2 = g.wavenumber(i2);
      const int j2 = k2 >= 0 ? k2 : k2 + N;
      out[static_cast<std::size_t>(i1) * g.n + i2] =
          cpad[static_cast<std::size_t>(j1) * N + j2];
    }
  }
  return out;
}

// Work transforms on the padded grid use the uncentered sample points
// x_j = j L / N, where the series basis e^{i xi_k x_j} is exactly the DFT
// kernel with no extra phase.  Products are pointwise, so any consistent
// sample set works; forward/1/N^dim recovers series coefficients directly.
cvec padded_values(const GridSpec& g, const cvec& cpad, int N) {
  return g.dim == 2 ? fft::backward(cpad, {N, N}) : fft::backward(cpad, {N});
}

cvec padded_spectrum(const GridSpec& g, cvec vals, int N) {
  cvec out = g.dim == 2 ? fft::forward(vals, {N, N}) : fft::forward(vals, {N});
  const double scale =
      1.0 / std::pow(static_cast<double>(N), static_cast<double>(g.dim));
  for (auto& x : out) x *= scale;
  return out;
}

}  // namespace

Field dealiased_product(const std::vector<Field>& fields,
                        const std::vector<bool>& conjugate) {
  if (fields.empty() || fields.size() != conjugate.size())
    throw InvalidArgument("dealiased_product: empty input or flag mismatch");
  const GridSpec& g = fields.front().grid();
  for (const Field& f : fields)
    if (!(f.grid() == g))
      throw InvalidArgument("dealiased_product: mixed grids");

  const int q = static_cast<int>(fields.size());
  const int factor = (q + 2) / 2;  // ceil((q+1)/2)
  const int N = g.n * factor;

  const std::size_t total =
      g.dim == 2 ? static_cast<std::size_t>(N) * N : static_cast<std::size_t>(N);
  cvec prod(total, complexd(1.0, 0.0));
  for (int j = 0; j < q; ++j) {
    cvec vals = padded_values(g, pad_spectrum(g, fields[j].spectrum(), factor), N);
    if (conjugate[j]) {
      for (std::size_t i = 0; i < total; ++i) prod[i] *= std::conj(vals[i]);
    } else {
      for (std::size_t i = 0; i < total; ++i) prod[i] *= vals[i];
    }
  }
  return Field::from_spectrum(
      g, truncate_spectrum(g, padded_spectrum(g, std::move(prod), N), factor));
}

Field nonlinearity(const Field& field, int p) {
  validate_power(p);
  const GridSpec& g = field.grid();
  const int factor = (p + 1) / 2;  // exact for the degree-p product
  const int N = g.n * factor;

  cvec vals = padded_values(g, pad_spectrum(g, field.spectrum(), factor), N);
  const int half = (p - 1) / 2;
  for (auto& u : vals) {
    double a2 = std::norm(u);
    double w = 1.0;
    for (int j = 0; j < half; ++j) w *= a2;
    u *= w;
  }
  return Field::from_spectrum(
      g, truncate_spectrum(g, padded_spectrum(g, std::move(vals), N), factor));
}

double mass(const Field& field) {
  const double l2 = gevrey_sobolev_norm(field, {0.0, 0.0});
  return l2 * l2;
}

double energy(const Field& field, int p) {
  validate_power(p);
  const GridSpec& g = field.grid();
  double grad = 0.0;
  const cvec& c = field.spectrum();
  for (std::size_t i = 0; i < c.size(); ++i)
    grad += g.xi_sq(i) * std::norm(c[i]);
  grad *= std::pow(g.box_len, g.dim);
  const double lp = lebesgue_norm(field, p + 1);
  return grad + 2.0 / (p + 1) * std::pow(lp, p + 1);
}

namespace {

void half_nonlinear_phase(cvec& vals, double dt_half, int p) {
  const int half = (p - 1) / 2;
  for (auto& u : vals) {
    const double a2 = std::norm(u);
    double amp = 1.0;
    for (int j = 0; j < half; ++j) amp *= a2;
    const double phase = -amp * dt_half;
    u *= complexd(std::cos(phase), std::sin(phase));
  }
}

}  // namespace

Field step_splitstep(const Field& field, double dt, int p) {
  validate_power(p);
  if (!(dt > 0.0)) throw InvalidArgument("step_splitstep: dt must be positive");
  const GridSpec& g = field.grid();

  cvec vals = field.values();
  half_nonlinear_phase(vals, 0.5 * dt, p);

  cvec c = detail::values_to_spectrum(g, vals);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double phase = -dt * g.xi_sq(i);
    c[i] *= complexd(std::cos(phase), std::sin(phase));
  }
  vals = detail::spectrum_to_values(g, c);

  half_nonlinear_phase(vals, 0.5 * dt, p);
  Field out = Field::from_values(g, std::move(vals));
  if (!out.all_finite())
    throw Error("step_splitstep: non-finite values (reduce dt)");
  return out;
}

Field step_duhamel_picard(const Field& field, double dt, int p,
                          const PicardParams& pp, PicardStats* stats) {
  validate_power(p);
  if (!(dt > 0.0))
    throw InvalidArgument("step_duhamel_picard: dt must be positive");
  if (!(0.5 < pp.b && pp.b < pp.b_prime && pp.b_prime < 1.0))
    throw InvalidArgument("step_duhamel_picard: need 1/2 < b < b' < 1");
  if (pp.quad_points < 2)
    throw InvalidArgument("step_duhamel_picard: quad_points must be >= 2");

  const double norm0 = gevrey_sobolev_norm(field, {0.0, 1.0});
  const double dt_max =
      pp.contraction_c0 * std::pow(1.0 + norm0, -2.0 * (p - 1));
  if (dt > dt_max)
    throw InvalidArgument(
        "step_duhamel_picard: dt=" + std::to_string(dt) +
        " above contraction threshold " + std::to_string(dt_max));

  const int Q = pp.quad_points;
  const double h = dt / (Q - 1);

  // u^{(0)} is the free flow of the data, stored at every quadrature node.
  std::vector<Field> cur;
  cur.reserve(Q);
  for (int q = 0; q < Q; ++q)
    cur.push_back(apply_multiplier(field, FreePropagator{q * h}));
  const std::vector<Field> free_flow = cur;

  if (stats) *stats = PicardStats{};

  for (int iter = 1; iter <= pp.max_iter; ++iter) {
    std::vector<Field> nl;
    nl.reserve(Q);
    for (int q = 0; q < Q; ++q) nl.push_back(nonlinearity(cur[q], p));

    std::vector<Field> next;
    next.reserve(Q);
    next.push_back(free_flow[0]);
    for (int q = 1; q < Q; ++q) {
      // Composite trapezoid over [0, s_q] with e^{i(s_q - s_r) Lap} applied
      // spectrally at each node.
      Field integral = Field::zero(field.grid());
      for (int r = 0; r <= q; ++r) {
        const double w = (r == 0 || r == q) ? 0.5 * h : h;
        integral = integral +
                   apply_multiplier(nl[r], FreePropagator{(q - r) * h}) *
                       complexd(w, 0.0);
      }
      next.push_back(free_flow[q] - integral * complexd(0.0, 1.0));
    }

    double diff = 0.0;
    for (int q = 0; q < Q; ++q)
      diff = std::max(diff, gevrey_sobolev_norm(next[q] - cur[q], {0.0, 1.0}));
    cur = std::move(next);
    if (stats) {
      stats->iterations = iter;
      stats->residuals.push_back(diff);
    }
    if (diff <= pp.tol) return cur[Q - 1];
  }
  throw NoConvergence("step_duhamel_picard: no fixed point within " +
                      std::to_string(pp.max_iter) + " iterations (dt too large)");
}

namespace {

TrajectorySample make_sample(double t, const Field& f, int p,
                             const DiagnosticsConfig& cfg) {
  TrajectorySample s{t, f, mass(f), energy(f, p), {}, {}};
  s.A_sigma.reserve(cfg.sigma_list.size());
  for (double sigma : cfg.sigma_list)
    s.A_sigma.push_back(almost_conserved_quantity(f, sigma, p));
  if (cfg.compute_radius && s.mass > 0.0) {
    RadiusFitConfig fc = cfg.fit;
    if (fc.sigma_max == 0.0) fc.sigma_max = f.grid().box_len / 4.0;
    s.radius = estimate_radius(f, fc);
  }
  return s;
}

}  // namespace

Trajectory evolve(const Field& u0, double T, double dt, int p, Method method,
                  const DiagnosticsConfig& cfg) {
  validate_power(p);
  if (T < 0.0 || (T > 0.0 && !(dt > 0.0)))
    throw InvalidArgument("evolve: need T >= 0 and dt > 0");

  Trajectory traj;
  traj.p = p;
  traj.samples.push_back(make_sample(0.0, u0, p, cfg));

  if (boundary_mass_fraction(u0) > 1e-8 && !traj.boundary_warning) {
    traj.boundary_warning = true;
    std::cerr << "[gnls] warning: more than 1e-8 of the mass lies within "
                 "box_len/4 of the boundary; the periodic box may be too small\n";
  }
  if (T == 0.0) return traj;

  const long long n_full = static_cast<long long>(std::floor(T / dt + 1e-9));
  const double remainder = T - n_full * dt;
  const bool has_remainder = remainder > 1e-12 * std::max(1.0, T);
  const long long n_steps = n_full + (has_remainder ? 1 : 0);
  const int stride = std::max(1, cfg.stride);

  Field u = u0;
  double t = 0.0;
  for (long long step = 1; step <= n_steps; ++step) {
    const double step_dt =
        (step == n_full + 1) ? remainder : dt;
    u = method == Method::splitstep
            ? step_splitstep(u, step_dt, p)
            : step_duhamel_picard(u, step_dt, p, cfg.picard);
    t = (step == n_steps) ? T : t + step_dt;
    if (step % stride == 0 || step == n_steps) {
      traj.samples.push_back(make_sample(t, u, p, cfg));
      if (!traj.boundary_warning && boundary_mass_fraction(u) > 1e-8) {
        traj.boundary_warning = true;
        std::cerr << "[gnls] warning: solution mass is reaching the box "
                     "boundary (fraction > 1e-8)\n";
      }
    }
  }
  return traj;
}

}  // namespace gnls
