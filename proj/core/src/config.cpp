#include "gnls/config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gnls/csv.hpp"
#include "gnls/errors.hpp"
#include "gnls/grid.hpp"
#include "gnls/nls.hpp"

namespace gnls {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InvalidArgument("config: bad number for key '" + key + "': " + v);
  }
}

long long parse_integer(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InvalidArgument("config: bad integer for key '" + key + "': " + v);
  }
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& v) {
  std::vector<double> out;
  std::string item;
  std::istringstream ss(v);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item));
  }
  return out;
}

DataProfile parse_profile(const std::string& v) {
  if (v == "plane_wave") return {DataProfileKind::plane_wave, 0.0, 0};
  if (v == "sech") return {DataProfileKind::sech, 0.0, 0};
  if (v == "gaussian") return {DataProfileKind::gaussian, 0.0, 0};
  if (v.rfind("random_gevrey(", 0) == 0 && v.back() == ')') {
    const std::string args = v.substr(14, v.size() - 15);
    const std::size_t comma = args.find(',');
    if (comma == std::string::npos)
      throw InvalidArgument("config: random_gevrey needs (sigma_star, seed)");
    DataProfile p;
    p.kind = DataProfileKind::random_gevrey;
    p.sigma_star = parse_double("data_profile", trim(args.substr(0, comma)));
    p.seed = static_cast<std::uint64_t>(
        parse_integer("data_profile", trim(args.substr(comma + 1))));
    return p;
  }
  throw InvalidArgument("config: unknown data_profile '" + v + "'");
}

}  // namespace

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::radius_decay: return "radius_decay";
    case ExperimentKind::conservation: return "conservation";
    case ExperimentKind::estimate_suite: return "estimate_suite";
  }
  return "unknown";
}

std::string to_string(const DataProfile& p) {
  switch (p.kind) {
    case DataProfileKind::plane_wave: return "plane_wave";
    case DataProfileKind::sech: return "sech";
    case DataProfileKind::gaussian: return "gaussian";
    case DataProfileKind::random_gevrey:
      return "random_gevrey(" + format_float(p.sigma_star) + "," +
             std::to_string(p.seed) + ")";
  }
  return "unknown";
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "experiment") {
    if (value == "radius_decay") cfg.experiment = ExperimentKind::radius_decay;
    else if (value == "conservation") cfg.experiment = ExperimentKind::conservation;
    else if (value == "estimate_suite") cfg.experiment = ExperimentKind::estimate_suite;
    else throw InvalidArgument("config: unknown experiment '" + value + "'");
  } else if (key == "dim") {
    cfg.dim = static_cast<int>(parse_integer(key, value));
  } else if (key == "n") {
    cfg.n = static_cast<int>(parse_integer(key, value));
  } else if (key == "box_len") {
    cfg.box_len = parse_double(key, value);
  } else if (key == "p") {
    cfg.p = static_cast<int>(parse_integer(key, value));
  } else if (key == "sigma0") {
    cfg.sigma0 = parse_double(key, value);
  } else if (key == "T") {
    cfg.T = parse_double(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_double(key, value);
  } else if (key == "method") {
    if (value != "splitstep" && value != "picard")
      throw InvalidArgument("config: method must be splitstep or picard");
    cfg.method = value;
  } else if (key == "data_profile") {
    cfg.data_profile = parse_profile(value);
  } else if (key == "sigma_list") {
    cfg.sigma_list = parse_double_list(key, value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
  } else if (key == "out_dir") {
    cfg.out_dir = value;
  } else if (key == "c0") {
    cfg.c0 = parse_double(key, value);
  } else if (key == "C_p") {
    cfg.C_p = parse_double(key, value);
  } else if (key == "eps") {
    cfg.eps = parse_double(key, value);
  } else if (key == "samples") {
    cfg.samples = static_cast<int>(parse_integer(key, value));
  } else if (key == "threads") {
    cfg.threads = static_cast<int>(parse_integer(key, value));
  } else if (key == "stride") {
    cfg.stride = static_cast<int>(parse_integer(key, value));
  } else if (key == "m") {
    cfg.m = static_cast<int>(parse_integer(key, value));
  } else if (key == "t_len") {
    cfg.t_len = parse_double(key, value);
  } else {
    throw InvalidArgument("config: unknown key '" + key + "'");
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument("config line " + std::to_string(lineno) +
                            ": expected 'key = value'");
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::string out;
  auto put = [&out](const std::string& k, const std::string& v) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  };
  put("experiment", to_string(cfg.experiment));
  put("dim", std::to_string(cfg.dim));
  put("n", std::to_string(cfg.n));
  put("box_len", format_float(cfg.box_len));
  put("p", std::to_string(cfg.p));
  put("sigma0", format_float(cfg.sigma0));
  put("T", format_float(cfg.T));
  put("dt", format_float(cfg.dt));
  put("method", cfg.method);
  put("data_profile", to_string(cfg.data_profile));
  std::string sl;
  for (std::size_t i = 0; i < cfg.sigma_list.size(); ++i) {
    if (i) sl += ",";
    sl += format_float(cfg.sigma_list[i]);
  }
  put("sigma_list", sl);
  put("seed", std::to_string(cfg.seed));
  put("out_dir", cfg.out_dir);
  put("c0", format_float(cfg.c0));
  put("C_p", format_float(cfg.C_p));
  put("eps", format_float(cfg.eps));
  put("samples", std::to_string(cfg.samples));
  put("threads", std::to_string(cfg.threads));
  put("stride", std::to_string(cfg.stride));
  put("m", std::to_string(cfg.m));
  put("t_len", format_float(cfg.t_len));
  return out;
}

void validate_config(const ExperimentConfig& cfg) {
  make_grid(cfg.dim, cfg.n, cfg.box_len);  // throws on bad dim/n/box
  validate_power(cfg.p);
  if (cfg.sigma0 < 0.0) throw InvalidArgument("config: sigma0 must be >= 0");
  if (cfg.T < 0.0) throw InvalidArgument("config: T must be >= 0");
  if (!(cfg.dt > 0.0)) throw InvalidArgument("config: dt must be positive");
  if (!(cfg.c0 > 0.0)) throw InvalidArgument("config: c0 must be positive");
  if (!(cfg.C_p > 0.0)) throw InvalidArgument("config: C_p must be positive");
  if (cfg.eps < 0.0) throw InvalidArgument("config: eps must be >= 0");
  if (cfg.stride < 1) throw InvalidArgument("config: stride must be >= 1");
  if (cfg.threads < 0) throw InvalidArgument("config: threads must be >= 0");
  for (double s : cfg.sigma_list)
    if (s < 0.0) throw InvalidArgument("config: sigma_list entries must be >= 0");
  if (cfg.experiment == ExperimentKind::estimate_suite) {
    if (cfg.samples < 100)
      throw InvalidArgument("config: estimate_suite needs samples >= 100");
    if (cfg.m < 2 || (cfg.m & (cfg.m - 1)) != 0)
      throw InvalidArgument("config: m must be a power of two >= 2");
    if (!(cfg.t_len > 0.0))
      throw InvalidArgument("config: t_len must be positive");
  }
  if (cfg.experiment == ExperimentKind::conservation) {
    int positive = 0;
    double lo = 0.0, hi = 0.0;
    for (double s : cfg.sigma_list)
      if (s > 0.0) {
        if (positive == 0) lo = hi = s;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
        ++positive;
      }
    if (positive < 3 || hi / lo < 99.0)
      throw InvalidArgument(
          "config: conservation needs >= 3 positive sigmas spanning >= 2 decades");
  }
}

}  // namespace gnls
