#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gnls {

enum class ExperimentKind { radius_decay, conservation, estimate_suite };

enum class DataProfileKind { plane_wave, sech, gaussian, random_gevrey };

struct DataProfile {
  DataProfileKind kind = DataProfileKind::sech;
  double sigma_star = 0.5;    // random_gevrey only
  std::uint64_t seed = 0;     // random_gevrey only
};

/// One run's worth of configuration.  File format: `key = value`, one per
/// line, '#' comments; keys are exactly the field names below.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::radius_decay;
  int dim = 1;
  int n = 256;
  double box_len = 40.0;
  int p = 5;
  double sigma0 = 0.5;
  double T = 1.0;
  double dt = 1e-3;
  std::string method = "splitstep";  // splitstep | picard
  DataProfile data_profile;
  std::vector<double> sigma_list;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  double c0 = 0.1;
  double C_p = 1.0;
  double eps = 0.0;
  int samples = 100;   // estimate-suite sample count
  int threads = 0;     // worker count; 0 = hardware
  int stride = 10;     // trajectory sampling stride in steps
  int m = 64;          // slab time samples (estimate suite)
  double t_len = 6.283185307179586;
};

std::string to_string(ExperimentKind k);
std::string to_string(const DataProfile& p);

/// Parses config text.  Unknown keys are rejected with the offending key
/// named; later lines override earlier ones.
ExperimentConfig parse_config(const std::string& text);

/// Canonical serialization: every field, fixed order, 17-digit floats.
/// serialize(parse(text)) is the canonical form of `text`.
std::string serialize_config(const ExperimentConfig& cfg);

/// Applies one `key = value` assignment (the CLI override path shares this
/// with the file parser).
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);

/// Re-validates every module precondition the config touches.
void validate_config(const ExperimentConfig& cfg);

}  // namespace gnls
