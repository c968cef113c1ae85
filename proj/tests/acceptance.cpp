// Acceptance gate: one timed PASS/FAIL line per criterion, exit code equal to
// the number of failures. Run it directly or through ctest.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncosc/assemble.hpp"
#include "ncosc/bopp.hpp"
#include "ncosc/hamiltonians.hpp"
#include "ncosc/model.hpp"
#include "ncosc/perturbation.hpp"
#include "ncosc/report.hpp"
#include "ncosc/verify.hpp"

using namespace ncosc;

namespace {

PhysicalParams base(double omega_c, double theta = 0.0, double eta = 0.0) {
  PhysicalParams p;
  p.omega_c = omega_c;
  p.theta = theta;
  p.eta = eta;
  return p;
}

OperatorPolynomial scalar_monomial(const GaussianRational& c, Sym s) {
  SymExponents se{};
  se[static_cast<int>(s)] = 1;
  return OperatorPolynomial::monomial(c, se, OpExponents{});
}

int tensor_sign(int i, int j) {
  if (i == j) return 0;
  return (i + 1) % 3 == j ? 1 : -1;
}

std::vector<double> closed_multiset(const TruncatedBasis& basis, const PhysicalParams& p) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(basis.size()));
  for (const auto& s : basis.states()) {
    auto qn = s.quantum_numbers();
    qn.mu = -qn.mu;
    v.push_back(unperturbed_energy(qn, p));
  }
  std::sort(v.begin(), v.end());
  return v;
}

bool channel_triangle(const PhysicalParams& p, std::vector<std::string>& notes) {
  VerifyOptions opts;  // (12, 6)
  const auto rows = verify_corrections(p, default_grid(4, 2), opts);
  if (rows.size() != 45) {
    notes.push_back("expected 45 states, got " + std::to_string(rows.size()));
    return false;
  }
  VerifyReport report;
  report.corrections = rows;
  const auto violations = engine_invariant_violations(report, p);
  for (const auto& v : violations) notes.push_back(v);
  double worst_fd = 0.0, worst_derived = 0.0;
  bool ok = violations.empty();
  for (const auto& row : rows) {
    if (row.degenerate) {
      std::ostringstream os;
      os << "unexpected degeneracy at (" << row.qn.n_rho << "," << row.qn.mu << "," << row.qn.n_z
         << ")";
      notes.push_back(os.str());
      ok = false;
      continue;
    }
    const double scale = std::max(std::abs(row.dE_pt), p.hbar * omega_tilde(p) * 1e-6);
    worst_fd = std::max(worst_fd, std::abs(row.res_fd) / scale);
    worst_derived = std::max(worst_derived, std::abs(row.res_derived) / scale);
  }
  std::ostringstream os;
  os << "worst relative residual: fd " << worst_fd << ", closed form " << worst_derived;
  notes.push_back(os.str());
  return ok;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  namespace fs = std::filesystem;
  static int counter = 0;
  const fs::path out = fs::temp_directory_path() /
                       ("ncosc_acc_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  const std::string cmd =
      std::string(NCOSC_CLI_PATH) + " " + args + " >" + out.string() + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  fs::remove(out);
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::vector<std::string>&)> run;
  };

  const GaussianRational i_unit = GaussianRational::imaginary();

  std::vector<Criterion> criteria;

  criteria.push_back({1, "symbolic identities: commutator tables and quoted expansions",
                      [&](std::vector<std::string>& notes) {
                        bool ok = true;
                        for (int i = 0; i < 3; ++i) {
                          for (int j = 0; j < 3; ++j) {
                            const Op xi = static_cast<Op>(i), xj = static_cast<Op>(j);
                            const Op pi = static_cast<Op>(3 + i), pj = static_cast<Op>(3 + j);
                            const auto canonical = commutator(OperatorPolynomial::op(xi),
                                                              OperatorPolynomial::op(pj));
                            const OperatorPolynomial want_c =
                                i == j ? scalar_monomial(i_unit, Sym::hbar) : OperatorPolynomial{};
                            if (!(canonical == want_c)) ok = false;

                            const int s = tensor_sign(i, j);
                            const OperatorPolynomial want_x =
                                s == 0 ? OperatorPolynomial{}
                                       : scalar_monomial(GaussianRational::imaginary(s), Sym::theta);
                            const OperatorPolynomial want_p =
                                s == 0 ? OperatorPolynomial{}
                                       : scalar_monomial(GaussianRational::imaginary(s), Sym::eta);
                            if (!(commutator(bopp_image(xi), bopp_image(xj)) == want_x)) ok = false;
                            if (!(commutator(bopp_image(pi), bopp_image(pj)) == want_p)) ok = false;
                          }
                        }
                        const auto checks = verify_expansion();
                        for (const auto& c : checks) {
                          const bool structural =
                              c.name == "Lz_expansion" || c.name == "p_squared_expansion" ||
                              c.name == "xy_squared_expansion" || c.name == "z_squared_expansion" ||
                              c.name == "reassembly";
                          if (structural && c.status != "MATCH") {
                            notes.push_back(c.name + " unexpectedly " + c.status);
                            ok = false;
                          }
                        }
                        return ok;
                      }});

  criteria.push_back({2, "expansion groups: five exact, cross-term discrepancy recorded",
                      [&](std::vector<std::string>& notes) {
                        bool ok = true;
                        bool recorded = false;
                        for (const auto& c : verify_expansion()) {
                          if (c.name == "group_eta_theta") {
                            if (c.status != "MISMATCH" || c.residual_terms.empty()) {
                              notes.push_back("expected a recorded cross-term residual");
                              ok = false;
                            } else {
                              recorded = true;
                              for (const auto& t : c.residual_terms)
                                notes.push_back("recorded residual: " + t);
                            }
                          } else if (c.name.rfind("group_", 0) == 0 && c.status != "MATCH") {
                            notes.push_back(c.name + " unexpectedly " + c.status);
                            ok = false;
                          }
                        }
                        return ok && recorded;
                      }});

  criteria.push_back({3, "commutative spectrum equals the closed-form multiset (rel 1e-10)",
                      [&](std::vector<std::string>& notes) {
                        const auto t0 = std::chrono::steady_clock::now();
                        bool ok = true;
                        for (double wc : {0.0, 0.7}) {
                          const PhysicalParams p = base(wc);
                          const auto spec = full_spectrum(p, 12, 6);
                          const auto closed = closed_multiset(spec.basis, p);
                          for (int i = 0; i < spec.eigenvalues.size(); ++i) {
                            const double a = spec.eigenvalues(i);
                            const double b = closed[static_cast<std::size_t>(i)];
                            if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(b))) ok = false;
                          }
                        }
                        const double dt =
                            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                .count();
                        if (dt >= 10.0) {
                          notes.push_back("runtime bound exceeded");
                          ok = false;
                        }
                        return ok;
                      }});

  criteria.push_back({4, "alpha = 1/2 rescales the commutative spectrum by 1/4 (1e-12)",
                      [&](std::vector<std::string>&) {
                        const PhysicalParams p1 = base(0.7);
                        PhysicalParams ph = p1;
                        ph.alpha = 0.5;
                        const auto s1 = full_spectrum(p1, 8, 4);
                        const auto sh = full_spectrum(ph, 8, 4);
                        for (int i = 0; i < s1.eigenvalues.size(); ++i) {
                          const double want = 0.25 * s1.eigenvalues(i);
                          if (std::abs(sh.eigenvalues(i) - want) >
                              1e-12 * std::max(1.0, std::abs(want)))
                            return false;
                        }
                        return true;
                      }});

  criteria.push_back({5, "ten listed operators have vanishing diagonals (abs 1e-12)",
                      [&](std::vector<std::string>&) {
                        const PhysicalParams p = base(0.7);
                        const TruncatedBasis b = enumerate_basis(8, 4);
                        const OperatorPolynomial list[] = {
                            ops::L_x(),
                            ops::L_y(),
                            poly_mul(ops::x(), ops::z()),
                            poly_mul(ops::y(), ops::z()),
                            poly_mul(ops::p_x(), ops::p_z()),
                            poly_mul(ops::p_y(), ops::p_z()),
                            poly_mul(ops::x(), ops::p_z()),
                            poly_mul(ops::y(), ops::p_z()),
                            ops::p_x(),
                            ops::p_y(),
                        };
                        for (const auto& sym : list) {
                          const auto M = assemble(evaluate_coefficients(sym, p), b, p);
                          for (int i = 0; i < b.size(); ++i)
                            if (std::abs(M.mat(i, i)) > 1e-12) return false;
                        }
                        return true;
                      }});

  criteria.push_back({6, "oracle triangle on 45 states, each channel (fd 1e-6, closed 1e-8)",
                      [&](std::vector<std::string>& notes) {
                        const auto t0 = std::chrono::steady_clock::now();
                        notes.push_back("momentum channel (eta = 1e-3):");
                        bool ok = channel_triangle(base(0.7, 0.0, 1e-3), notes);
                        notes.push_back("position channel (theta = 1e-3):");
                        ok = channel_triangle(base(0.7, 1e-3, 0.0), notes) && ok;
                        const double dt =
                            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                .count();
                        if (dt >= 60.0) {
                          notes.push_back("runtime bound exceeded");
                          ok = false;
                        }
                        return ok;
                      }});

  criteria.push_back({7, "reference-formula report: residual columns populated, conventions recorded",
                      [&](std::vector<std::string>& notes) {
                        const PhysicalParams p = base(0.7, 1e-3, 1e-3);
                        VerifyOptions opts;
                        opts.cutoff_xy = 10;
                        opts.cutoff_z = 5;
                        const auto report = run_verify_report(p, default_grid(3, 2), opts);
                        if (report.corrections.size() != 30) return false;
                        for (const auto& row : report.corrections) {
                          if (!std::isfinite(row.dE_paper) || !std::isfinite(row.res_paper))
                            return false;
                          if (!std::isfinite(row.dE_derived) || !std::isfinite(row.res_derived))
                            return false;
                        }
                        bool binomial = false, mu_sign = false;
                        for (const auto& [key, text] : report.conventions) {
                          if (key == "binomial" && !text.empty()) binomial = true;
                          if (key == "mu_sign" && !text.empty()) mu_sign = true;
                        }
                        if (!binomial || !mu_sign) {
                          notes.push_back("conventions block incomplete");
                          return false;
                        }
                        return true;
                      }});

  criteria.push_back({8, "ground-state energy stable to 1e-8 between cutoffs (12,6) and (16,8)",
                      [&](std::vector<std::string>& notes) {
                        const PhysicalParams p = base(0.7, 1e-3, 1e-3);
                        const double a = full_spectrum(p, 12, 6).eigenvalues(0);
                        const double b = full_spectrum(p, 16, 8).eigenvalues(0);
                        std::ostringstream os;
                        os << "E0(12,6) = " << format_double(a) << ", E0(16,8) = "
                           << format_double(b);
                        notes.push_back(os.str());
                        return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a));
                      }});

  criteria.push_back({9, "first-order validity ratios below 1e-2",
                      [&](std::vector<std::string>& notes) {
                        const PhysicalParams p = base(0.7, 1e-3, 1e-3);
                        const auto r = validity_ratios(p);
                        if (!r.r_eta.has_value()) return false;
                        std::ostringstream os;
                        os << "r_eta = " << *r.r_eta << ", r_theta = " << r.r_theta;
                        notes.push_back(os.str());
                        return *r.r_eta < 1e-2 && r.r_theta < 1e-2;
                      }});

  criteria.push_back({10, "byte-deterministic verify and sweep via the installed binary",
                      [&](std::vector<std::string>& notes) {
                        const std::string verify_cmd =
                            "verify --omega-c 0.7 --theta 1e-3 --eta 1e-3 --grid-xy 1 --grid-z 0 "
                            "--cutoff-xy 8 --cutoff-z 4 --format json";
                        const auto v1 = run_cli(verify_cmd);
                        const auto v2 = run_cli(verify_cmd);
                        if (v1.code != 0 || v2.code != 0 || v1.out != v2.out || v1.out.empty()) {
                          notes.push_back("verify runs differ or failed");
                          return false;
                        }
                        const std::string sweep_tail =
                            "sweep --sweep omega_c:0:1:5 --cutoff-xy 4 --cutoff-z 2 --workers ";
                        const auto w1 = run_cli(sweep_tail + "1");
                        const auto w4 = run_cli(sweep_tail + "4");
                        if (w1.code != 0 || w4.code != 0 || w1.out != w4.out || w1.out.empty()) {
                          notes.push_back("sweep runs differ across worker counts");
                          return false;
                        }
                        return true;
                      }});

  int failures = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> notes;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(notes);
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %-68s (%.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.label, dt);
    for (const auto& n : notes) std::printf("          %s\n", n.c_str());
    if (!ok) ++failures;
  }
  std::printf("acceptance: %d/10 passed\n", 10 - failures);
  return failures;
}
