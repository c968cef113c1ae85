#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncosc/model.hpp"
#include "ncosc/perturbation.hpp"

namespace ncosc {

// One symbolic comparison: engine expansion vs hard-coded reference form.
// MATCH iff the residual is the zero polynomial. Mismatches are data to
// report, not errors — except for the engine-vs-engine "reassembly" check.
struct IdentityCheck {
  std::string name;
  std::string status;  // "MATCH" | "MISMATCH"
  OperatorPolynomial engine_side;
  OperatorPolynomial reference_side;
  OperatorPolynomial residual;  // engine - reference
  std::vector<std::string> residual_terms;
};

std::vector<IdentityCheck> verify_expansion();

struct CorrectionRow {
  QuantumNumbers qn;  // engine labels
  double E0 = 0.0;    // engine H0 diagonal
  double dE_pt = 0.0;
  double dE_fd = 0.0;  // NaN when the state is degenerate at the expansion point
  double dE_paper = 0.0;
  double dE_derived = 0.0;
  double res_paper = 0.0;    // dE_pt - dE_paper
  double res_derived = 0.0;  // dE_pt - dE_derived
  double res_fd = 0.0;       // dE_pt - dE_fd
  bool degenerate = false;
};

struct VerifyOptions {
  int cutoff_xy = 12;
  int cutoff_z = 6;
  double deg_tol = 1e-8;
  double fd_step = 1e-4;
};

// States with n_plus + n_minus <= grid_xy and n_z <= grid_z, in basis order.
std::vector<QuantumNumbers> default_grid(int grid_xy = 3, int grid_z = 2);

std::vector<CorrectionRow> verify_corrections(const PhysicalParams& params,
                                              const std::vector<QuantumNumbers>& grid,
                                              const VerifyOptions& opts = {});

// Convention choices surfaced with every report, in fixed order:
// binomial, mu_sign, p_z_typo.
std::vector<std::pair<std::string, std::string>> convention_notes();

struct VerifyReport {
  std::vector<IdentityCheck> identities;
  std::vector<CorrectionRow> corrections;
  std::vector<std::pair<std::string, std::string>> conventions;
};

VerifyReport run_verify_report(const PhysicalParams& params,
                               const std::vector<QuantumNumbers>& grid,
                               const VerifyOptions& opts = {});

// Engine-vs-engine invariants: the reassembly identity plus PT/fd/derived
// agreement on non-degenerate rows. Reference-vs-engine mismatches are NOT
// violations. Returns human-readable violation messages; empty means ok.
std::vector<std::string> engine_invariant_violations(const VerifyReport& report,
                                                     const PhysicalParams& params);

}  // namespace ncosc
