#include "ncosc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "ncosc/errors.hpp"

namespace ncosc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& where) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ParseError(where + ": expected a number, got '" + value + "'");
  }
  if (pos != value.size())
    throw ParseError(where + ": trailing characters in number '" + value + "'");
  if (!std::isfinite(v)) throw InvalidValue(where + ": value must be finite");
  return v;
}

int parse_int(const std::string& value, const std::string& where) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(value, &pos);
  } catch (const std::exception&) {
    throw ParseError(where + ": expected an integer, got '" + value + "'");
  }
  if (pos != value.size())
    throw ParseError(where + ": trailing characters in integer '" + value + "'");
  if (v < -1000000000L || v > 1000000000L)
    throw InvalidValue(where + ": integer out of range");
  return static_cast<int>(v);
}

bool is_sweepable(const std::string& name) {
  static const std::vector<std::string> keys = {"hbar",  "mass",  "omega", "omega_c",
                                                "alpha", "theta", "eta"};
  for (const auto& k : keys)
    if (k == name) return true;
  return false;
}

}  // namespace

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where) {
  if (key == "hbar") {
    cfg.params.hbar = parse_double(value, where);
  } else if (key == "mass") {
    cfg.params.mass = parse_double(value, where);
  } else if (key == "omega") {
    cfg.params.omega = parse_double(value, where);
  } else if (key == "omega_c") {
    cfg.params.omega_c = parse_double(value, where);
    cfg.omega_c_explicit = true;
  } else if (key == "alpha") {
    cfg.params.alpha = parse_double(value, where);
    if (!(cfg.params.alpha > 0.0 && cfg.params.alpha <= 1.0))
      throw InvalidValue(where + ": alpha must lie in (0, 1]");
  } else if (key == "theta") {
    cfg.params.theta = parse_double(value, where);
  } else if (key == "eta") {
    cfg.params.eta = parse_double(value, where);
  } else if (key == "q") {
    cfg.charge = parse_double(value, where);
  } else if (key == "B") {
    cfg.magnetic_field = parse_double(value, where);
  } else if (key == "c") {
    cfg.light_speed = parse_double(value, where);
    if (cfg.light_speed == 0.0) throw InvalidValue(where + ": c must be nonzero");
  } else if (key == "cutoff_xy") {
    cfg.cutoff_xy = parse_int(value, where);
    if (cfg.cutoff_xy < 0) throw InvalidValue(where + ": cutoff_xy must be >= 0");
  } else if (key == "cutoff_z") {
    cfg.cutoff_z = parse_int(value, where);
    if (cfg.cutoff_z < 0) throw InvalidValue(where + ": cutoff_z must be >= 0");
  } else if (key == "grid_xy") {
    cfg.grid_xy = parse_int(value, where);
    if (cfg.grid_xy < 0) throw InvalidValue(where + ": grid_xy must be >= 0");
  } else if (key == "grid_z") {
    cfg.grid_z = parse_int(value, where);
    if (cfg.grid_z < 0) throw InvalidValue(where + ": grid_z must be >= 0");
  } else if (key == "deg_tol") {
    cfg.deg_tol = parse_double(value, where);
    if (!(cfg.deg_tol > 0.0)) throw InvalidValue(where + ": deg_tol must be > 0");
  } else if (key == "fd_step") {
    cfg.fd_step = parse_double(value, where);
    if (!(cfg.fd_step > 0.0)) throw InvalidValue(where + ": fd_step must be > 0");
  } else if (key == "format") {
    if (value != "csv" && value != "json")
      throw InvalidValue(where + ": format must be csv or json");
    cfg.format = value;
  } else if (key == "out") {
    cfg.out_path = value;
  } else if (key == "sweep") {
    cfg.sweep = parse_sweep_spec(value, where);
  } else if (key == "workers") {
    cfg.workers = parse_int(value, where);
    if (cfg.workers < 1) throw InvalidValue(where + ": workers must be >= 1");
  } else {
    throw UnknownKey(where + ": unknown key '" + key + "'");
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& source) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(where + ": expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(where + ": empty key");
    apply_setting(cfg, key, value, where);
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str(), path);
}

SweepAxis parse_sweep_spec(const std::string& spec, const std::string& where) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = spec.find(':', pos);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(pos));
      break;
    }
    parts.push_back(spec.substr(pos, colon - pos));
    pos = colon + 1;
  }
  if (parts.size() != 4)
    throw ParseError(where + ": sweep spec must be param:start:stop:count");
  SweepAxis axis;
  axis.param = trim(parts[0]);
  if (!is_sweepable(axis.param))
    throw InvalidValue(where + ": cannot sweep '" + axis.param + "'");
  axis.start = parse_double(trim(parts[1]), where);
  axis.stop = parse_double(trim(parts[2]), where);
  axis.count = parse_int(trim(parts[3]), where);
  if (axis.count < 1) throw InvalidValue(where + ": sweep count must be >= 1");
  return axis;
}

void validate_params(const PhysicalParams& p) {
  if (!(p.hbar > 0.0)) throw InvalidValue("hbar must be > 0");
  if (!(p.mass > 0.0)) throw InvalidValue("mass must be > 0");
  if (!(p.omega > 0.0)) throw InvalidValue("omega must be > 0");
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw InvalidValue("alpha must lie in (0, 1]");
  for (double v : {p.hbar, p.mass, p.omega, p.omega_c, p.alpha, p.theta, p.eta})
    if (!std::isfinite(v)) throw InvalidValue("physical parameters must be finite");
}

void finalize_config(RunConfig& cfg) {
  if (cfg.magnetic_field) {
    if (cfg.omega_c_explicit)
      throw InvalidValue("omega_c and B are both set; give one or the other");
    cfg.params.omega_c =
        cyclotron_frequency(cfg.charge, *cfg.magnetic_field, cfg.params.mass, cfg.light_speed);
  }
  validate_params(cfg.params);
  if (cfg.cutoff_xy < 0 || cfg.cutoff_z < 0) throw InvalidValue("cutoffs must be >= 0");
  if (cfg.grid_xy < 0 || cfg.grid_z < 0) throw InvalidValue("grid bounds must be >= 0");
  if (!(cfg.deg_tol > 0.0)) throw InvalidValue("deg_tol must be > 0");
  if (!(cfg.fd_step > 0.0)) throw InvalidValue("fd_step must be > 0");
  if (cfg.format != "csv" && cfg.format != "json")
    throw InvalidValue("format must be csv or json");
  if (cfg.workers < 1) throw InvalidValue("workers must be >= 1");
  if (cfg.sweep && cfg.sweep->count < 1) throw InvalidValue("sweep count must be >= 1");
}

}  // namespace ncosc
