// Command-line front end: subcommands expand | spectrum | pt | verify | sweep.
// Settings come from defaults, then a config file (--config or $NCO_CONFIG),
// then flags; flags and file lines share one key grammar and validator.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ncosc/config.hpp"
#include "ncosc/errors.hpp"
#include "ncosc/run.hpp"

namespace {

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"--hbar", "hbar", "reduced Planck constant (> 0)"},
    {"--mass", "mass", "particle mass (> 0)"},
    {"--omega", "omega", "oscillator frequency (> 0)"},
    {"--omega-c", "omega_c", "cyclotron frequency (signed; excludes --B)"},
    {"--q", "q", "charge, feeds omega_c = q B / (m c)"},
    {"--B", "B", "magnetic field, feeds omega_c = q B / (m c) (excludes --omega-c)"},
    {"--c", "c", "speed of light, feeds omega_c = q B / (m c)"},
    {"--alpha", "alpha", "dimensionless scale in (0, 1]"},
    {"--theta", "theta", "position-position non-commutativity"},
    {"--eta", "eta", "momentum-momentum non-commutativity"},
    {"--cutoff-xy", "cutoff_xy", "planar excitation cutoff n_+ + n_-"},
    {"--cutoff-z", "cutoff_z", "axial excitation cutoff n_z"},
    {"--grid-xy", "grid_xy", "correction-table grid bound on n_+ + n_-"},
    {"--grid-z", "grid_z", "correction-table grid bound on n_z"},
    {"--deg-tol", "deg_tol", "degeneracy window in units of hbar*omega_tilde"},
    {"--fd-step", "fd_step", "finite-difference base step"},
    {"--format", "format", "output format: csv | json"},
    {"--out", "out", "output file (atomic write); default stdout"},
    {"--sweep", "sweep", "sweep axis param:start:stop:count"},
    {"--workers", "workers", "sweep worker threads"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-commutative charged-oscillator toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "config file with `key = value` lines");

  std::map<std::string, std::string> raw;
  for (const auto& s : kFlags) app.add_option(s.flag, raw[s.key], s.help);

  auto* cmd_expand = app.add_subcommand("expand", "print the grouped symbolic expansion");
  auto* cmd_spectrum = app.add_subcommand("spectrum", "diagonalize at one parameter point");
  auto* cmd_pt = app.add_subcommand("pt", "first-order correction table");
  auto* cmd_verify = app.add_subcommand("verify", "symbolic + numeric cross-validation report");
  auto* cmd_sweep = app.add_subcommand("sweep", "spectra along one parameter axis");
  for (auto* sub : {cmd_expand, cmd_spectrum, cmd_pt, cmd_verify, cmd_sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    ncosc::RunConfig cfg;
    std::string file = config_path;
    if (file.empty())
      if (const char* env = std::getenv("NCO_CONFIG")) file = env;
    if (!file.empty()) ncosc::apply_config_file(cfg, file);
    for (const auto& s : kFlags)
      if (app.count(s.flag) > 0) ncosc::apply_setting(cfg, s.key, raw[s.key], s.flag);
    ncosc::finalize_config(cfg);
    const std::string sub = app.get_subcommands().front()->get_name();
    return ncosc::run_subcommand(sub, cfg, std::cout, std::cerr);
  } catch (const ncosc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
