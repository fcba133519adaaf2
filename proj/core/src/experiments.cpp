#include "gnls/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "gnls/diagnostics.hpp"
#include "gnls/errors.hpp"
#include "gnls/estimates.hpp"
#include "gnls/initial_data.hpp"
#include "gnls/nls.hpp"
#include "gnls/rng.hpp"
#include "gnls/version.hpp"

namespace gnls {

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Field make_initial_data(const ExperimentConfig& cfg) {
  const GridSpec grid = make_grid(cfg.dim, cfg.n, cfg.box_len);
  switch (cfg.data_profile.kind) {
    case DataProfileKind::plane_wave: return plane_wave(grid);
    case DataProfileKind::sech: return sech_profile(grid);
    case DataProfileKind::gaussian: return gaussian_profile(grid);
    case DataProfileKind::random_gevrey:
      return random_gevrey(grid, cfg.data_profile.sigma_star,
                           cfg.data_profile.seed);
  }
  throw InvalidArgument("make_initial_data: bad profile");
}

namespace {

Method method_of(const ExperimentConfig& cfg) {
  return cfg.method == "picard" ? Method::picard : Method::splitstep;
}

void echo_config(ResultTable& t, const ExperimentConfig& cfg) {
  t.metadata.push_back(std::string("gevrey-nls ") + kVersion);
  t.metadata.push_back("experiment = " + to_string(cfg.experiment));
  t.metadata.push_back("seed = " + std::to_string(cfg.seed));
  // The worker count cannot influence results, so it is left out of the
  // echo: runs differing only in `threads` emit identical bytes.
  std::istringstream ss(serialize_config(cfg));
  std::string line;
  while (std::getline(ss, line))
    if (line.rfind("experiment", 0) != 0 && line.rfind("seed ", 0) != 0 &&
        line.rfind("threads", 0) != 0)
      t.metadata.push_back(line);
}

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
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
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace

ResultTable run_radius_decay(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const Field u0 = make_initial_data(cfg);
  const ScheduleParams sp{cfg.c0, cfg.C_p, cfg.eps};

  DiagnosticsConfig diag;
  diag.stride = cfg.stride;
  diag.sigma_list = {cfg.sigma0};
  for (double s : cfg.sigma_list)
    if (s != cfg.sigma0) diag.sigma_list.push_back(s);
  diag.compute_radius = true;

  const Trajectory traj =
      evolve(u0, cfg.T, cfg.dt, cfg.p, method_of(cfg), diag);

  // Schedule constant c from the lifespan of the data and A_{sigma0}(0).
  const double norm0 = gevrey_sobolev_norm(u0, {cfg.sigma0, 1.0});
  const double delta = lifespan(norm0, cfg.p, sp);
  const double A0 = traj.samples.front().A_sigma.front();
  double c_sched = 0.0;
  if (A0 > 0.0) c_sched = sigma_schedule(1.0, delta, A0, cfg.p, sp);

  ResultTable table;
  table.experiment = to_string(cfg.experiment);
  table.columns = {"t",         "mass",      "energy",
                   "A_sigma0",  "sigma_est", "sigma_fit_residual",
                   "sigma_schedule", "saturated_flag"};

  for (const auto& s : traj.samples) {
    const double sched = s.t > 0.0 ? c_sched / s.t : cfg.sigma0;
    table.add_row({format_float(s.t), format_float(s.mass),
                   format_float(s.energy), format_float(s.A_sigma.front()),
                   format_float(s.radius.sigma_est),
                   format_float(s.radius.residual), format_float(sched),
                   s.radius.saturated ? "1" : "0"});
  }

  // Decay exponent over the final decade, alpha = 0 when sigma_est never
  // decreases (saturated or degenerate data).
  bool decreases = false;
  for (std::size_t i = 1; i < traj.samples.size(); ++i)
    if (traj.samples[i].radius.sigma_est <
        traj.samples[i - 1].radius.sigma_est - 1e-15)
      decreases = true;
  double alpha = 0.0;
  if (decreases) {
    std::vector<double> lx, ly;
    for (const auto& s : traj.samples)
      if (s.t >= cfg.T / 10.0 && s.t > 0.0 && s.radius.sigma_est > 0.0) {
        lx.push_back(std::log(s.t));
        ly.push_back(std::log(s.radius.sigma_est));
      }
    if (lx.size() >= 2) alpha = -ls_slope(lx, ly);
  }

  // Induction surrogate: A at the schedule's final-time sigma must stay
  // within twice its initial value along the whole trajectory.
  int violations = 0;
  if (c_sched > 0.0 && cfg.T > 0.0) {
    const double sigma_check = c_sched / cfg.T;
    const double bound = 2.0 * almost_conserved_quantity(u0, cfg.sigma0, cfg.p);
    for (const auto& s : traj.samples)
      if (almost_conserved_quantity(s.field, sigma_check, cfg.p) > bound)
        ++violations;
  }

  echo_config(table, cfg);
  table.metadata.push_back("delta = " + format_float(delta));
  table.metadata.push_back("schedule_c = " + format_float(c_sched));
  table.metadata.push_back("A_sigma0_initial = " + format_float(A0));
  table.metadata.push_back("alpha = " + format_float(alpha));
  table.metadata.push_back("induction_violations = " +
                           std::to_string(violations));
  table.metadata.push_back(std::string("boundary_warning = ") +
                           (traj.boundary_warning ? "1" : "0"));
  return table;
}

ResultTable run_conservation(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const Field u0 = make_initial_data(cfg);
  const ScheduleParams sp{cfg.c0, cfg.C_p, cfg.eps};
  const int count = static_cast<int>(cfg.sigma_list.size());

  struct Row {
    double sigma, delta, supD, mass_drift, energy_drift;
  };
  std::vector<Row> rows(count);

  parallel_for(count, cfg.threads, [&](int i) {
    const double sigma = cfg.sigma_list[i];
    const double norm = gevrey_sobolev_norm(u0, {sigma, 1.0});
    const double delta = lifespan(norm, cfg.p, sp);

    DiagnosticsConfig diag;
    diag.stride = 1;
    diag.sigma_list = {sigma};
    // Resolve the short existence interval regardless of the global dt.
    const double dt_eff = std::min(cfg.dt, delta / 32.0);
    const Trajectory traj =
        evolve(u0, delta, dt_eff, cfg.p, method_of(cfg), diag);

    const double A_start = traj.samples.front().A_sigma.front();
    const double m_start = traj.samples.front().mass;
    const double e_start = traj.samples.front().energy;
    double supA = A_start, dm = 0.0, de = 0.0;
    for (const auto& s : traj.samples) {
      supA = std::max(supA, s.A_sigma.front());
      dm = std::max(dm, std::abs(s.mass - m_start));
      de = std::max(de, std::abs(s.energy - e_start));
    }
    rows[i] = {sigma, delta, supA - A_start,
               m_start > 0.0 ? dm / m_start : 0.0,
               e_start > 0.0 ? de / e_start : 0.0};
  });

  ResultTable table;
  table.experiment = to_string(cfg.experiment);
  table.columns = {"sigma", "delta", "sup_drift_A", "mass_drift",
                   "energy_drift"};
  for (const auto& r : rows)
    table.add_row({format_float(r.sigma), format_float(r.delta),
                   format_float(r.supD), format_float(r.mass_drift),
                   format_float(r.energy_drift)});

  // Slope of log D(sigma) vs log sigma over the fit floor.
  constexpr double kFitFloor = 1e-13;
  std::vector<double> lx, ly;
  for (const auto& r : rows)
    if (r.sigma > 0.0 && r.supD > kFitFloor) {
      lx.push_back(std::log(r.sigma));
      ly.push_back(std::log(r.supD));
    }
  const double slope = lx.size() >= 2 ? ls_slope(lx, ly) : 0.0;

  echo_config(table, cfg);
  table.metadata.push_back("drift_slope = " + format_float(slope));
  table.metadata.push_back("drift_fit_points = " +
                           std::to_string(lx.size()));
  return table;
}

namespace {

struct SuiteRow {
  EstimateId id;
  std::string label;
  int dim;
  EstimateParams params;
};

std::vector<SuiteRow> suite_rows(const ExperimentConfig& cfg) {
  std::vector<SuiteRow> rows;
  EstimateParams base;
  base.p = cfg.p;
  base.sigma = 0.1;
  base.b = 0.6;

  EstimateParams st1 = base;
  st1.q = 8.0;
  st1.r = 4.0;
  rows.push_back({EstimateId::strichartz, "strichartz_q8_r4_d1", 1, st1});
  EstimateParams st2 = base;
  st2.q = 4.0;
  st2.r = 4.0;
  rows.push_back({EstimateId::strichartz, "strichartz_q4_r4_d2", 2, st2});

  for (EstimateId id :
       {EstimateId::multilinear_l2, EstimateId::multilinear_dual,
        EstimateId::multilinear_gevrey, EstimateId::commutator_l2,
        EstimateId::commutator_grad_dual, EstimateId::trace_embedding})
    rows.push_back({id, to_string(id), cfg.dim, base});
  return rows;
}

}  // namespace

ResultTable run_estimate_suite(const ExperimentConfig& cfg) {
  validate_config(cfg);

  ResultTable table;
  table.experiment = to_string(cfg.experiment);
  table.columns = {"estimate_id", "n",         "samples",
                   "excluded_zero_rhs", "max_ratio", "median_ratio"};

  const std::vector<bool> conj = nls_conjugation_pattern(cfg.p);

  for (const SuiteRow& row : suite_rows(cfg)) {
    for (int resolution : {cfg.n, 2 * cfg.n}) {
      // The 2d rows keep the same per-axis resolution ladder but live on a
      // smaller time slab to stay desk-scale.
      const int m = row.dim == 2 ? std::max(2, cfg.m / 2) : cfg.m;
      const GridSpec grid = make_grid(row.dim, resolution, cfg.box_len);
      SamplerConfig sampler{grid, m, cfg.t_len};

      const int arity = estimate_arity(row.id, cfg.p);
      std::vector<std::optional<double>> ratios(cfg.samples);
      parallel_for(cfg.samples, cfg.threads, [&](int i) {
        Rng rng(cfg.seed + static_cast<std::uint64_t>(i));
        std::vector<SpaceTimeField> inputs;
        inputs.reserve(arity);
        for (int j = 0; j < arity; ++j)
          inputs.push_back(sample_slab_field(sampler, rng));
        ratios[i] = estimate_ratio(row.id, inputs, conj, row.params);
      });

      std::vector<double> used;
      int excluded = 0;
      for (const auto& r : ratios) {
        if (r) used.push_back(*r);
        else ++excluded;
      }
      if (used.empty())
        throw DegenerateInput("estimate_suite: all samples excluded for " +
                              row.label);
      const double mx = *std::max_element(used.begin(), used.end());
      std::vector<double> sorted = used;
      std::sort(sorted.begin(), sorted.end());
      const double med = sorted.size() % 2
                             ? sorted[sorted.size() / 2]
                             : 0.5 * (sorted[sorted.size() / 2 - 1] +
                                      sorted[sorted.size() / 2]);
      table.add_row({row.label, format_int(resolution),
                     format_int(cfg.samples), format_int(excluded),
                     format_float(mx), format_float(med)});
    }
  }

  echo_config(table, cfg);
  return table;
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::radius_decay: return run_radius_decay(cfg);
    case ExperimentKind::conservation: return run_conservation(cfg);
    case ExperimentKind::estimate_suite: return run_estimate_suite(cfg);
  }
  throw InvalidArgument("run_experiment: bad experiment kind");
}

void emit_plot_script(const ResultTable& table, const std::string& csv_name,
                      const std::string& out_path) {
  if (table.rows.empty())
    throw InvalidArgument("emit_plot_script: table has no rows");

  std::string s;
  s += "# gnuplot script generated by gevrey-nls\n";
  s += "set datafile separator \",\"\n";
  s += "set datafile commentschars \"#\"\n";
  s += "set key autotitle columnhead\n";
  s += "set terminal pngcairo size 900,600\n\n";

  auto col = [&table](const std::string& name) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      if (table.columns[i] == name) return std::to_string(i + 1);
    throw Error("emit_plot_script: missing column " + name);
  };

  if (table.experiment == "radius_decay") {
    s += "set output 'radius_decay_sigma.png'\n";
    s += "set logscale xy\n";
    s += "set xlabel 't'\nset ylabel 'sigma'\n";
    s += "plot '" + csv_name + "' using " + col("t") + ":" + col("sigma_est") +
         " with lines title 'sigma_est', \\\n     '" + csv_name + "' using " +
         col("t") + ":" + col("sigma_schedule") +
         " with lines title 'schedule c/t'\n\n";
    s += "unset logscale\n";
    for (const std::string c : {"mass", "energy", "A_sigma0"}) {
      s += "set output 'radius_decay_" + c + ".png'\n";
      s += "set xlabel 't'\nset ylabel '" + c + "'\n";
      s += "plot '" + csv_name + "' using " + col("t") + ":" + col(c) +
           " with lines title '" + c + "'\n\n";
    }
  } else if (table.experiment == "conservation") {
    s += "set output 'conservation_drift.png'\n";
    s += "set logscale xy\n";
    s += "set xlabel 'sigma'\nset ylabel 'sup drift of A_sigma'\n";
    s += "guide(x) = x\n";
    s += "plot '" + csv_name + "' using " + col("sigma") + ":" +
         col("sup_drift_A") +
         " with points title 'D(sigma)', \\\n     guide(x) with lines title "
         "'slope 1 guide'\n\n";
    s += "unset logscale\n";
    for (const std::string c : {"mass_drift", "energy_drift"}) {
      s += "set output 'conservation_" + c + ".png'\n";
      s += "set logscale x\n";
      s += "set xlabel 'sigma'\nset ylabel '" + c + "'\n";
      s += "plot '" + csv_name + "' using " + col("sigma") + ":" + col(c) +
           " with points title '" + c + "'\n\n";
    }
  } else {
    for (const std::string c : {"max_ratio", "median_ratio"}) {
      s += "set output 'estimate_suite_" + c + ".png'\n";
      s += "set xlabel 'n'\nset ylabel '" + c + "'\n";
      s += "plot '" + csv_name + "' using " + col("n") + ":" + col(c) +
           " with points title '" + c + "'\n\n";
    }
  }

  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("emit_plot_script: cannot open " + out_path);
  f << s;
  if (!f) throw Error("emit_plot_script: write failed");
}

}  // namespace gnls
