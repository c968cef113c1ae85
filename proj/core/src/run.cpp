#include "ncosc/run.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "ncosc/bopp.hpp"
#include "ncosc/errors.hpp"
#include "ncosc/perturbation.hpp"
#include "ncosc/report.hpp"
#include "ncosc/verify.hpp"

namespace ncosc {

namespace {

std::string render_expand() {
  const auto parts = collect_orders(expanded_hamiltonian());
  std::ostringstream os;
  for (const auto& [key, part] : parts)
    os << "theta^" << key.first << " eta^" << key.second << ": " << part.to_string() << '\n';
  return os.str();
}

void append_param_echo(std::ostringstream& os, const RunConfig& cfg, bool json) {
  const auto& p = cfg.params;
  struct Field {
    const char* name;
    double value;
  };
  const Field fields[] = {{"hbar", p.hbar},       {"mass", p.mass},
                          {"omega", p.omega},     {"omega_c", p.omega_c},
                          {"alpha", p.alpha},     {"theta", p.theta},
                          {"eta", p.eta},         {"omega_tilde", omega_tilde(p)}};
  if (json) {
    for (const auto& f : fields) os << "  \"" << f.name << "\": " << format_double(f.value) << ",\n";
    os << "  \"cutoff_xy\": " << cfg.cutoff_xy << ",\n  \"cutoff_z\": " << cfg.cutoff_z << ",\n";
  } else {
    for (const auto& f : fields) os << "# " << f.name << " = " << format_double(f.value) << '\n';
    os << "# cutoff_xy = " << cfg.cutoff_xy << '\n' << "# cutoff_z = " << cfg.cutoff_z << '\n';
  }
}

std::string render_spectrum(const RunConfig& cfg) {
  const SpectrumResult spec = full_spectrum(cfg.params, cfg.cutoff_xy, cfg.cutoff_z);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << "{\n";
    append_param_echo(os, cfg, true);
    os << "  \"energies\": [";
    for (int i = 0; i < spec.eigenvalues.size(); ++i)
      os << (i ? ", " : "") << format_double(spec.eigenvalues(i));
    os << "]\n}\n";
  } else {
    append_param_echo(os, cfg, false);
    os << "index,energy\n";
    for (int i = 0; i < spec.eigenvalues.size(); ++i)
      os << i << ',' << format_double(spec.eigenvalues(i)) << '\n';
  }
  return os.str();
}

VerifyOptions options_of(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.cutoff_xy = cfg.cutoff_xy;
  opts.cutoff_z = cfg.cutoff_z;
  opts.deg_tol = cfg.deg_tol;
  opts.fd_step = cfg.fd_step;
  return opts;
}

std::string render_pt(const RunConfig& cfg) {
  const auto rows =
      verify_corrections(cfg.params, default_grid(cfg.grid_xy, cfg.grid_z), options_of(cfg));
  return cfg.format == "json" ? render_corrections_json(rows) : render_corrections_csv(rows);
}

PhysicalParams with_value(PhysicalParams p, const std::string& name, double v) {
  if (name == "hbar")
    p.hbar = v;
  else if (name == "mass")
    p.mass = v;
  else if (name == "omega")
    p.omega = v;
  else if (name == "omega_c")
    p.omega_c = v;
  else if (name == "alpha")
    p.alpha = v;
  else if (name == "theta")
    p.theta = v;
  else if (name == "eta")
    p.eta = v;
  else
    throw InvalidValue("cannot sweep '" + name + "'");
  return p;
}

std::string render_sweep(const RunConfig& cfg) {
  if (!cfg.sweep) throw ConfigError("sweep requires an axis: --sweep param:start:stop:count");
  const SweepAxis& axis = *cfg.sweep;
  const int count = axis.count;
  std::vector<std::string> chunks(count);
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto point_value = [&](int i) {
    return count == 1 ? axis.start
                      : axis.start + (axis.stop - axis.start) * static_cast<double>(i) /
                                         static_cast<double>(count - 1);
  };
  auto render_point = [&](int i) {
    const double v = point_value(i);
    const PhysicalParams p = with_value(cfg.params, axis.param, v);
    validate_params(p);
    const SpectrumResult spec = full_spectrum(p, cfg.cutoff_xy, cfg.cutoff_z);
    std::ostringstream os;
    if (cfg.format == "json") {
      os << "    {\"value\": " << format_double(v) << ", \"energies\": [";
      for (int k = 0; k < spec.eigenvalues.size(); ++k)
        os << (k ? ", " : "") << format_double(spec.eigenvalues(k));
      os << "]}";
    } else {
      for (int k = 0; k < spec.eigenvalues.size(); ++k)
        os << axis.param << ',' << format_double(v) << ',' << k << ','
           << format_double(spec.eigenvalues(k)) << '\n';
    }
    return os.str();
  };

  auto worker = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        chunks[i] = render_point(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int nworkers = std::min(cfg.workers, count);
  if (nworkers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::ostringstream os;
  if (cfg.format == "json") {
    os << "{\n  \"param\": \"" << axis.param << "\",\n  \"points\": [\n";
    for (int i = 0; i < count; ++i) os << chunks[i] << (i + 1 < count ? "," : "") << '\n';
    os << "  ]\n}\n";
  } else {
    os << "param,value,index,energy\n";
    for (int i = 0; i < count; ++i) os << chunks[i];
  }
  return os.str();
}

}  // namespace

int run_subcommand(const std::string& subcommand, const RunConfig& cfg, std::ostream& out,
                   std::ostream& diag) {
  std::string content;
  int code = 0;
  if (subcommand == "expand") {
    content = render_expand();
  } else if (subcommand == "spectrum") {
    content = render_spectrum(cfg);
  } else if (subcommand == "pt") {
    content = render_pt(cfg);
  } else if (subcommand == "verify") {
    const VerifyReport report =
        run_verify_report(cfg.params, default_grid(cfg.grid_xy, cfg.grid_z), options_of(cfg));
    if (cfg.format == "json") {
      content = render_report_json(report);
    } else {
      content = render_corrections_csv(report.corrections);
      for (const auto& check : report.identities)
        diag << "identity " << check.name << ": " << check.status << '\n';
      for (const auto& [key, text] : report.conventions)
        diag << "convention " << key << ": " << text << '\n';
    }
    const auto violations = engine_invariant_violations(report, cfg.params);
    for (const auto& v : violations) diag << "invariant violation: " << v << '\n';
    if (!violations.empty()) code = 2;
  } else if (subcommand == "sweep") {
    content = render_sweep(cfg);
  } else {
    throw ConfigError("unknown subcommand '" + subcommand + "'");
  }
  if (!cfg.out_path.empty())
    write_file_atomic(cfg.out_path, content);
  else
    out << content;
  return code;
}

}  // namespace ncosc
