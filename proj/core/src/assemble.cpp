#include "ncosc/assemble.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "ncosc/errors.hpp"

namespace ncosc {

namespace {

using Cplx = std::complex<double>;
using StateKey = std::array<int, 3>;  // (n_plus, n_minus, n_z)
using AmpMap = std::map<StateKey, Cplx>;

struct LadderTerm {
  int mode;    // 0 = plus, 1 = minus, 2 = z
  int delta;   // +1 raising, -1 lowering
  Cplx factor;
};

std::array<std::vector<LadderTerm>, kOpCount> ladder_table(const PhysicalParams& p) {
  const double wt = omega_tilde(p);
  const double cx = std::sqrt(p.hbar / (4.0 * p.mass * wt));
  const double cp = std::sqrt(p.mass * p.hbar * wt / 4.0);
  const double cz = std::sqrt(p.hbar / (2.0 * p.mass * p.omega));
  const double cpz = std::sqrt(p.mass * p.hbar * p.omega / 2.0);
  const Cplx i(0.0, 1.0);

  std::array<std::vector<LadderTerm>, kOpCount> t;
  t[static_cast<int>(Op::x)] = {{0, -1, cx}, {1, -1, cx}, {0, +1, cx}, {1, +1, cx}};
  t[static_cast<int>(Op::y)] = {{0, -1, i * cx}, {1, -1, -i * cx}, {0, +1, -i * cx}, {1, +1, i * cx}};
  t[static_cast<int>(Op::p_x)] = {{0, +1, i * cp}, {1, +1, i * cp}, {0, -1, -i * cp}, {1, -1, -i * cp}};
  t[static_cast<int>(Op::p_y)] = {{0, +1, cp}, {1, +1, -cp}, {0, -1, cp}, {1, -1, -cp}};
  t[static_cast<int>(Op::z)] = {{2, -1, cz}, {2, +1, cz}};
  t[static_cast<int>(Op::p_z)] = {{2, +1, i * cpz}, {2, -1, -i * cpz}};
  return t;
}

AmpMap apply_terms(const std::vector<LadderTerm>& terms, const AmpMap& in) {
  AmpMap out;
  for (const auto& [state, amp] : in) {
    for (const auto& t : terms) {
      const int n = state[t.mode];
      if (t.delta < 0 && n == 0) continue;
      StateKey s = state;
      s[t.mode] += t.delta;
      const double root = t.delta > 0 ? std::sqrt(n + 1.0) : std::sqrt(double(n));
      out[s] += amp * t.factor * root;
    }
  }
  return out;
}

// Applies a normal-ordered monomial to |column>: rightmost factor first,
// i.e. p_z, p_y, p_x, z, y, x.
AmpMap apply_monomial(const OpExponents& ops,
                      const std::array<std::vector<LadderTerm>, kOpCount>& table,
                      const BasisState& column) {
  AmpMap amps{{StateKey{column.n_plus, column.n_minus, column.n_z}, Cplx(1.0, 0.0)}};
  for (int o = kOpCount - 1; o >= 0; --o) {
    for (int e = 0; e < ops[o]; ++e) amps = apply_terms(table[o], amps);
  }
  return amps;
}

}  // namespace

Eigen::MatrixXcd elementary_matrix(Op op, const TruncatedBasis& basis,
                                   const PhysicalParams& params) {
  const auto table = ladder_table(params);
  const int n = basis.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  OpExponents ops{};
  ops[static_cast<int>(op)] = 1;
  for (int j = 0; j < n; ++j) {
    const AmpMap amps = apply_monomial(ops, table, basis.state(j));
    for (const auto& [state, amp] : amps) {
      if (auto idx = basis.find(BasisState{state[0], state[1], state[2]})) m(*idx, j) += amp;
    }
  }
  return m;
}

HermitianMatrix assemble(const NumericOperatorPolynomial& poly, const TruncatedBasis& basis,
                         const PhysicalParams& params, long capacity) {
  const int d = poly.total_degree();
  const long padded = basis_size(basis.cutoff_xy() + d, basis.cutoff_z() + d);
  if (padded > capacity) {
    throw CapacityExceeded("degree-" + std::to_string(d) + " assembly would pad the basis to " +
                           std::to_string(padded) + " states, above capacity " +
                           std::to_string(capacity));
  }

  const auto table = ladder_table(params);
  const int n = basis.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (const auto& term : poly.terms) {
      const AmpMap amps = apply_monomial(term.ops, table, basis.state(j));
      for (const auto& [state, amp] : amps) {
        if (auto idx = basis.find(BasisState{state[0], state[1], state[2]})) {
          m(*idx, j) += term.coeff * amp;
        }
      }
    }
  }

  HermitianMatrix out;
  out.hermiticity_defect = n == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
  out.mat = std::move(m);
  out.basis = basis;
  return out;
}

double expectation(const HermitianMatrix& V, const BasisState& s) {
  const int i = V.basis.index_of(s);
  return V.mat(i, i).real();
}

Eigen::VectorXd h0_diagonal(const TruncatedBasis& basis, const PhysicalParams& p) {
  const double wt = omega_tilde(p);
  const double a2 = p.alpha * p.alpha;
  Eigen::VectorXd diag(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const BasisState& s = basis.state(i);
    diag(i) = a2 * (p.hbar * wt * (s.n_xy() + 1) - 0.5 * p.hbar * p.omega_c * s.mu() +
                    p.hbar * p.omega * (s.n_z + 0.5));
  }
  return diag;
}

}  // namespace ncosc
