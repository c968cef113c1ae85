#pragma once

#include <optional>
#include <string>

#include "ncosc/params.hpp"

namespace ncosc {

// One-parameter sweep axis: `count` evenly spaced values from start to stop
// (a single-point sweep sits at `start`).
struct SweepAxis {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
};

struct RunConfig {
  PhysicalParams params;
  int cutoff_xy = 12;
  int cutoff_z = 6;
  double deg_tol = 1e-8;
  double fd_step = 1e-4;
  std::string format = "csv";  // csv | json
  std::string out_path;        // empty -> stdout
  std::optional<SweepAxis> sweep;
  int workers = 1;
  // quantum-number grid for correction tables (pt/verify): n_+ + n_- <= grid_xy, n_z <= grid_z
  int grid_xy = 3;
  int grid_z = 2;

  // magnetic-field route to omega_c, resolved by finalize_config
  double charge = 1.0;       // q
  double light_speed = 1.0;  // c
  std::optional<double> magnetic_field;  // B
  bool omega_c_explicit = false;
};

// Applies one `key = value` setting; `where` prefixes error messages
// (e.g. "run.cfg:3" or "--omega-c"). Throws UnknownKey / InvalidValue / ParseError.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::string& where);

// Parses line-oriented `key = value` text ('#' starts a comment, blank lines
// ignored); `source` names the text in error messages.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& source);

void apply_config_file(RunConfig& cfg, const std::string& path);

// `param:start:stop:count`, param one of the physical-parameter keys.
SweepAxis parse_sweep_spec(const std::string& spec, const std::string& where);

// Range checks on the physical parameters (also called per sweep point).
void validate_params(const PhysicalParams& p);

// Cross-field resolution + validation after all settings are applied:
// turns q/B/c into omega_c (rejecting a simultaneous explicit omega_c) and
// range-checks every field.
void finalize_config(RunConfig& cfg);

}  // namespace ncosc
