#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ncosc/hamiltonians.hpp"
#include "ncosc/reference_forms.hpp"
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

// Dimension bookkeeping as (mass, length, time) powers.
using Dims = std::array<int, 3>;

Dims sym_dims(Sym s) {
  switch (s) {
    case Sym::hbar: return {1, 2, -1};
    case Sym::mass: return {1, 0, 0};
    case Sym::omega: return {0, 0, -1};
    case Sym::omega_c: return {0, 0, -1};
    case Sym::alpha: return {0, 0, 0};
    case Sym::theta: return {0, 2, 0};   // commutator of two positions over hbar-free convention
    case Sym::eta: return {2, 2, -2};    // commutator of two momenta
  }
  return {};
}

Dims op_dims(Op o) {
  switch (o) {
    case Op::x:
    case Op::y:
    case Op::z: return {0, 1, 0};
    case Op::p_x:
    case Op::p_y:
    case Op::p_z: return {1, 1, -1};
  }
  return {};
}

Dims term_dims(const MonomialKey& key) {
  Dims d{0, 0, 0};
  for (int s = 0; s < kSymCount; ++s) {
    const Dims ds = sym_dims(static_cast<Sym>(s));
    for (int a = 0; a < 3; ++a) d[a] += key.syms[s] * ds[a];
  }
  for (int o = 0; o < kOpCount; ++o) {
    const Dims dop = op_dims(static_cast<Op>(o));
    for (int a = 0; a < 3; ++a) d[a] += key.ops[o] * dop[a];
  }
  return d;
}

void check_homogeneous(const OperatorPolynomial& poly, const Dims& want) {
  for (const auto& [key, coeff] : poly.terms()) {
    const Dims got = term_dims(key);
    CHECK(got == want);
  }
}

const IdentityCheck& find_check(const std::vector<IdentityCheck>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  REQUIRE_MESSAGE(false, "missing check " << name);
  return checks.front();
}

}  // namespace

TEST_CASE("expansion identity checks: names, statuses, and the one recorded mismatch") {
  const auto checks = verify_expansion();
  REQUIRE(checks.size() == 11);
  const char* names[] = {"Lz_expansion",   "p_squared_expansion", "xy_squared_expansion",
                         "z_squared_expansion", "group_alpha2_H0", "group_eta",
                         "group_theta",    "group_eta_theta",     "group_eta2",
                         "group_theta2",   "reassembly"};
  for (std::size_t i = 0; i < checks.size(); ++i) CHECK(checks[i].name == names[i]);
  for (const auto& c : checks) {
    if (c.name == "group_eta_theta") {
      CHECK(c.status == "MISMATCH");
      CHECK(c.residual_terms.size() == 6);
      CHECK_FALSE(c.residual.is_zero());
    } else {
      CHECK(c.status == "MATCH");
      CHECK(c.residual.is_zero());
      CHECK(c.residual_terms.empty());
    }
  }

  // The recorded mismatch is exactly -(omega_c / 4 alpha^2 hbar^2)(L_x + L_y + L_z):
  // the engine's cross term has the opposite sign of the quoted one, and
  // engine - reference doubles it.
  SymExponents se{};
  se[static_cast<int>(Sym::hbar)] = -2;
  se[static_cast<int>(Sym::omega_c)] = 1;
  se[static_cast<int>(Sym::alpha)] = -2;
  const OperatorPolynomial scalar =
      OperatorPolynomial::monomial(GaussianRational::ratio(-1, 4), se, OpExponents{});
  const OperatorPolynomial expected = poly_mul(scalar, ops::L_x() + ops::L_y() + ops::L_z());
  CHECK(find_check(checks, "group_eta_theta").residual == expected);
}

TEST_CASE("every expansion term carries the dimensions of its left-hand side") {
  const Dims energy{1, 2, -2};
  const Dims angular{1, 2, -1};
  const Dims momentum_sq{2, 2, -2};
  const Dims length_sq{0, 2, 0};

  check_homogeneous(expanded_hamiltonian(), energy);
  check_homogeneous(bopp_shift(ops::L_z()), angular);
  check_homogeneous(reference::lz_expansion(), angular);
  check_homogeneous(reference::p_squared_expansion(), momentum_sq);
  check_homogeneous(reference::xy_squared_expansion(), length_sq);
  check_homogeneous(reference::z_squared_expansion(), length_sq);

  const Dims dtheta = sym_dims(Sym::theta);
  const Dims deta = sym_dims(Sym::eta);
  const std::pair<int, int> orders[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};
  for (const auto& [j, k] : orders) {
    Dims want = energy;
    for (int a = 0; a < 3; ++a) want[a] -= j * dtheta[a] + k * deta[a];
    check_homogeneous(reference::group({j, k}), want);
    const auto parts = collect_orders(expanded_hamiltonian());
    check_homogeneous(parts.at({j, k}), want);
  }
}

TEST_CASE("default grid enumerates low-lying labels without repeats") {
  const auto grid = default_grid(3, 2);
  CHECK(grid.size() == 30);
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& qn : grid) {
    CHECK(2 * qn.n_rho + std::abs(qn.mu) <= 3);
    CHECK(qn.n_z <= 2);
    CHECK(qn.n_rho >= 0);
    CHECK(qn.n_z >= 0);
    CHECK(seen.insert({qn.n_rho, qn.mu, qn.n_z}).second);
  }
  CHECK(grid.front().n_rho == 0);
  CHECK(grid.front().mu == 0);
  CHECK(grid.front().n_z == 0);
}

TEST_CASE("correction rows close the oracle triangle away from degeneracy") {
  const PhysicalParams p = base(0.7, 1e-3, 1e-3);
  VerifyOptions opts;
  opts.cutoff_xy = 10;
  opts.cutoff_z = 5;
  const auto rows = verify_corrections(p, default_grid(2, 1), opts);
  REQUIRE(rows.size() == 12);
  const double floor = p.hbar * omega_tilde(p) * 1e-6;
  bool paper_disagrees_somewhere = false;
  for (const auto& row : rows) {
    CHECK_FALSE(row.degenerate);
    CHECK(std::isfinite(row.dE_pt));
    CHECK(std::isfinite(row.dE_fd));
    CHECK(std::isfinite(row.dE_paper));
    CHECK(std::isfinite(row.dE_derived));
    auto relabeled = row.qn;
    relabeled.mu = -relabeled.mu;
    CHECK(row.E0 == doctest::Approx(unperturbed_energy(relabeled, p)).epsilon(1e-12));
    CHECK(std::abs(row.res_derived) <=
          1e-8 * std::max({std::abs(row.dE_pt), std::abs(row.dE_derived), floor}));
    CHECK(std::abs(row.res_fd) <= 1e-6 * std::max(std::abs(row.dE_pt), floor));
    if (std::abs(row.res_paper) > 1e-6) paper_disagrees_somewhere = true;
  }
  CHECK(paper_disagrees_somewhere);

  const auto report = run_verify_report(p, default_grid(2, 1), opts);
  CHECK(engine_invariant_violations(report, p).empty());
}

TEST_CASE("field-free degeneracy is flagged and block-resolved") {
  const double theta = 1e-3;
  const PhysicalParams p = base(0.0, theta, 0.0);
  VerifyOptions opts;
  opts.cutoff_xy = 8;
  opts.cutoff_z = 4;
  const std::vector<QuantumNumbers> grid = {{0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, 0}};
  const auto rows = verify_corrections(p, grid, opts);
  REQUIRE(rows.size() == 4);
  const double lam = std::sqrt(3.0) * theta / 2.0;

  CHECK(rows[0].degenerate);
  CHECK(rows[1].degenerate);
  CHECK(rows[2].degenerate);
  CHECK_FALSE(rows[3].degenerate);
  // sorted block eigenvalues assigned in ascending basis-index order:
  // (0,0,1) precedes (0,-1,0) precedes (0,1,0) in the enumeration
  CHECK(rows[2].dE_pt == doctest::Approx(-lam).epsilon(1e-10));
  CHECK(std::abs(rows[1].dE_pt) < 1e-12);
  CHECK(rows[0].dE_pt == doctest::Approx(+lam).epsilon(1e-10));
  for (int i = 0; i < 3; ++i) CHECK(std::isnan(rows[static_cast<std::size_t>(i)].dE_fd));
  CHECK(std::isfinite(rows[3].dE_fd));

  // degenerate rows are exempt from the fd invariant
  VerifyReport report;
  report.identities = verify_expansion();
  report.corrections = rows;
  report.conventions = convention_notes();
  CHECK(engine_invariant_violations(report, p).empty());
}

TEST_CASE("doctored reports trip the engine invariants") {
  const PhysicalParams p = base(0.7, 1e-3, 1e-3);
  VerifyOptions opts;
  opts.cutoff_xy = 8;
  opts.cutoff_z = 4;
  auto report = run_verify_report(p, default_grid(1, 0), opts);
  REQUIRE(engine_invariant_violations(report, p).empty());

  auto bad_fd = report;
  bad_fd.corrections[0].res_fd = 1.0;
  const auto v1 = engine_invariant_violations(bad_fd, p);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1[0].find("fd") != std::string::npos);

  auto bad_derived = report;
  bad_derived.corrections[0].res_derived = 1.0;
  const auto v2 = engine_invariant_violations(bad_derived, p);
  REQUIRE_FALSE(v2.empty());
  CHECK(v2[0].find("derived") != std::string::npos);

  auto bad_reassembly = report;
  for (auto& c : bad_reassembly.identities) {
    if (c.name == "reassembly") c.status = "MISMATCH";
  }
  const auto v3 = engine_invariant_violations(bad_reassembly, p);
  REQUIRE_FALSE(v3.empty());
  CHECK(v3[0] == "reassembly identity failed");

  // reference-vs-engine mismatches are data, not violations
  auto bad_reference = report;
  for (auto& c : bad_reference.identities) {
    if (c.name == "group_eta") c.status = "MISMATCH";
  }
  CHECK(engine_invariant_violations(bad_reference, p).empty());
}

TEST_CASE("convention notes are fixed and ordered") {
  const auto notes = convention_notes();
  REQUIRE(notes.size() == 3);
  CHECK(notes[0].first == "binomial");
  CHECK(notes[1].first == "mu_sign");
  CHECK(notes[2].first == "p_z_typo");
  for (const auto& [key, text] : notes) CHECK_FALSE(text.empty());
}

TEST_CASE("report renderers emit parseable, faithful output") {
  const PhysicalParams p = base(0.0, 1e-3, 0.0);
  VerifyOptions opts;
  opts.cutoff_xy = 8;
  opts.cutoff_z = 4;
  const std::vector<QuantumNumbers> grid = {{0, 0, 0}, {0, 1, 0}};
  const auto report = run_verify_report(p, grid, opts);

  const std::string csv = render_corrections_csv(report.corrections);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "n_rho,mu,n_z,E0,dE_pt,dE_fd,dE_paper,dE_derived,res_paper,res_derived,res_fd,degenerate");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find(",nan,") != std::string::npos);  // degenerate fd cell
  CHECK(csv.back() == '\n');

  const auto doc = nlohmann::json::parse(render_report_json(report));
  REQUIRE(doc.contains("identities"));
  REQUIRE(doc.contains("corrections"));
  REQUIRE(doc.contains("conventions"));
  CHECK(doc["identities"].size() == 11);
  for (const auto& item : doc["identities"]) {
    CHECK(item.contains("name"));
    CHECK(item.contains("status"));
    CHECK(item["residual_terms"].is_array());
    if (item["name"] == "group_eta_theta") {
      CHECK(item["status"] == "MISMATCH");
      CHECK(item["residual_terms"].size() == 6);
    }
  }
  REQUIRE(doc["corrections"].size() == 2);
  const auto& row0 = doc["corrections"][0];
  for (const char* key : {"n_rho", "mu", "n_z", "E0", "dE_pt", "dE_fd", "dE_paper", "dE_derived",
                          "res_paper", "res_derived", "res_fd", "degenerate"}) {
    CHECK(row0.contains(key));
  }
  CHECK(row0["degenerate"] == false);
  CHECK(doc["corrections"][1]["degenerate"] == true);
  CHECK(doc["corrections"][1]["dE_fd"].is_null());  // NaN renders as null
  CHECK(doc["conventions"].size() == 3);
  CHECK(doc["conventions"].contains("p_z_typo"));

  const auto corr = nlohmann::json::parse(render_corrections_json(report.corrections));
  CHECK(corr["corrections"] == doc["corrections"]);

  // numeric fields round-trip at full precision
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(std::nan("")) == "nan");
  const double e0 = report.corrections[0].E0;
  CHECK(std::stod(format_double(e0)) == e0);
}
