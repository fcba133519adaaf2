#pragma once

#include <functional>
#include <string>

#include "gnls/config.hpp"
#include "gnls/csv.hpp"
#include "gnls/field.hpp"

namespace gnls {

/// Builds the initial data named by the config on the config's grid.
Field make_initial_data(const ExperimentConfig& cfg);

/// Evolves the data to T, tracking the measured radius sigma_est(t), the
/// almost-conserved A_sigma, and the theoretical 1/t schedule column; fits
/// the decay exponent alpha over the final decade and checks the induction
/// surrogate A_{sigma_sched(T)}(t) <= 2 A_{sigma0}(0).
/// Columns: t, mass, energy, A_sigma0, sigma_est, sigma_fit_residual,
///          sigma_schedule, saturated_flag
ResultTable run_radius_decay(const ExperimentConfig& cfg);

/// For each sigma in sigma_list evolves on [0, delta(sigma)] and records the
/// almost-conservation discrepancy D(sigma) = sup_t A_sigma - A_sigma(0)
/// together with mass/energy drifts; the log-log slope of D against sigma is
/// recorded in the metadata.
/// Columns: sigma, delta, sup_drift_A, mass_drift, energy_drift
ResultTable run_conservation(const ExperimentConfig& cfg);

/// Runs the Monte-Carlo estimate harness for every estimate in the canonical
/// list over the resolution ladder (n, 2n); deterministic in the seed,
/// including with parallel workers.
/// Columns: estimate_id, n, samples, excluded_zero_rhs, max_ratio, median_ratio
ResultTable run_estimate_suite(const ExperimentConfig& cfg);

/// Dispatches on cfg.experiment.
ResultTable run_experiment(const ExperimentConfig& cfg);

/// Writes a gnuplot script next to the CSV (one plot block per diagnostic
/// column; log-log where the quantity is a decay law).  Throws on an empty
/// table.
void emit_plot_script(const ResultTable& table, const std::string& csv_name,
                      const std::string& out_path);

/// Deterministic fan-out: runs body(i) for i in [0, count) on `threads`
/// workers (0 = hardware concurrency); results must be written to
/// preallocated slots so the merge is by index.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace gnls
