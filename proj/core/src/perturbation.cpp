#include "ncosc/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ncosc/bopp.hpp"
#include "ncosc/errors.hpp"
#include "ncosc/hamiltonians.hpp"

namespace ncosc {

PTResult first_order_pt(const Eigen::VectorXd& h0diag, const HermitianMatrix& V,
                        const PhysicalParams& params, double deg_tol) {
  const int n = static_cast<int>(h0diag.size());
  const double window = deg_tol * params.hbar * omega_tilde(params);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h0diag(a) < h0diag(b); });

  PTResult r;
  r.corrections.assign(n, 0.0);
  r.cluster_of.assign(n, -1);

  int pos = 0;
  while (pos < n) {
    std::vector<int> members{order[pos]};
    int end = pos + 1;
    while (end < n && h0diag(order[end]) - h0diag(order[end - 1]) < window) {
      members.push_back(order[end]);
      ++end;
    }
    pos = end;
    std::sort(members.begin(), members.end());

    const int cid = static_cast<int>(r.clusters.size());
    const int k = static_cast<int>(members.size());
    std::vector<double> evals;
    if (k == 1) {
      const double v = V.mat(members[0], members[0]).real();
      r.corrections[members[0]] = v;
      evals = {v};
    } else {
      Eigen::MatrixXcd block(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) block(a, b) = V.mat(members[a], members[b]);
      double off = 0.0, scale = 0.0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          scale = std::max(scale, std::abs(block(a, b)));
          if (a != b) off = std::max(off, std::abs(block(a, b)));
        }
      if (off <= 1e-12 * std::max(scale, 1.0)) {
        // Diagonal block: eigenvalues coincide with diagonal entries, so the
        // corrections keep their state labels.
        for (int a = 0; a < k; ++a) {
          const double v = block(a, a).real();
          r.corrections[members[a]] = v;
          evals.push_back(v);
        }
        std::sort(evals.begin(), evals.end());
      } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (block + block.adjoint()),
                                                               Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
          throw ConvergenceFailure("degenerate block eigensolve failed");
        for (int a = 0; a < k; ++a) {
          const double v = solver.eigenvalues()(a);
          r.corrections[members[a]] = v;  // ascending values in basis-index order
          evals.push_back(v);
        }
      }
    }
    for (int m : members) r.cluster_of[m] = cid;
    r.clusters.push_back(std::move(members));
    r.cluster_eigenvalues.push_back(std::move(evals));
  }
  return r;
}

const OperatorPolynomial& expanded_hamiltonian() {
  static const OperatorPolynomial h = bopp_shift(ops::H0());
  return h;
}

SpectrumResult full_spectrum(const PhysicalParams& params, int cutoff_xy, int cutoff_z,
                             bool with_vectors, long capacity) {
  const NumericOperatorPolynomial numeric = evaluate_coefficients(expanded_hamiltonian(), params);
  const TruncatedBasis basis = enumerate_basis(cutoff_xy, cutoff_z, capacity);
  return eigensolve(assemble(numeric, basis, params, capacity), with_vectors);
}

namespace {

// E(point) for each tracked row index, with overlap tracking.
std::vector<double> tracked_energies(const SpectrumResult& s, const std::vector<int>& rows,
                                     double min_overlap) {
  std::vector<double> energies(rows.size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const int i = rows[t];
    int best = -1;
    double best_overlap = -1.0;
    for (int k = 0; k < s.eigenvectors.cols(); ++k) {
      const double o = std::abs(s.eigenvectors(i, k));
      if (o > best_overlap) {
        best_overlap = o;
        best = k;
      }
    }
    if (best_overlap < min_overlap) {
      throw TrackingLost("eigenstate tracking lost for basis index " + std::to_string(i) +
                         ": best overlap " + std::to_string(best_overlap));
    }
    energies[t] = s.eigenvalues(best);
  }
  return energies;
}

}  // namespace

std::vector<double> fd_slopes(const PhysicalParams& params, NcChannel channel,
                              const std::vector<BasisState>& states, int cutoff_xy, int cutoff_z,
                              const FdOptions& opts) {
  PhysicalParams base = params;
  base.theta = 0.0;
  base.eta = 0.0;

  const TruncatedBasis basis = enumerate_basis(cutoff_xy, cutoff_z);
  const Eigen::VectorXd h0 = h0_diagonal(basis, base);
  const double window = opts.deg_tol * base.hbar * omega_tilde(base);

  std::vector<int> rows;            // tracked basis indices (degenerate ones excluded)
  std::vector<std::size_t> slot;    // result slot per tracked row
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> result(states.size(), nan);
  for (std::size_t t = 0; t < states.size(); ++t) {
    const int i = basis.index_of(states[t]);
    bool degenerate = false;
    for (int j = 0; j < basis.size() && !degenerate; ++j) {
      if (j != i && std::abs(h0(j) - h0(i)) < window) degenerate = true;
    }
    if (degenerate) continue;
    rows.push_back(i);
    slot.push_back(t);
  }
  if (rows.empty()) return result;

  const int levels = std::max(1, opts.levels);
  // diffs[l][t]: central difference at step h/2^l for tracked state t.
  std::vector<std::vector<double>> diffs(levels);
  for (int l = 0; l < levels; ++l) {
    const double h = opts.h / double(1 << l);
    std::vector<std::vector<double>> side(2);
    for (int sgn = 0; sgn < 2; ++sgn) {
      PhysicalParams point = base;
      const double v = (sgn == 0 ? +h : -h);
      (channel == NcChannel::Theta ? point.theta : point.eta) = v;
      const SpectrumResult s = full_spectrum(point, cutoff_xy, cutoff_z, /*with_vectors=*/true);
      side[sgn] = tracked_energies(s, rows, opts.min_overlap);
    }
    diffs[l].resize(rows.size());
    for (std::size_t t = 0; t < rows.size(); ++t) diffs[l][t] = (side[0][t] - side[1][t]) / (2 * h);
  }

  // Richardson extrapolation in h^2 across the levels.
  for (int m = 1; m < levels; ++m) {
    const double w = std::pow(4.0, m);
    for (int l = 0; l + m < levels; ++l) {
      for (std::size_t t = 0; t < rows.size(); ++t) {
        diffs[l][t] = (w * diffs[l + 1][t] - diffs[l][t]) / (w - 1.0);
      }
    }
  }
  for (std::size_t t = 0; t < rows.size(); ++t) result[slot[t]] = diffs[0][t];
  return result;
}

double fd_slope(const PhysicalParams& params, NcChannel channel, const BasisState& state,
                int cutoff_xy, int cutoff_z, const FdOptions& opts) {
  const auto slopes = fd_slopes(params, channel, {state}, cutoff_xy, cutoff_z, opts);
  if (std::isnan(slopes[0])) {
    throw DegenerateState("state (" + std::to_string(state.n_plus) + "," +
                          std::to_string(state.n_minus) + "," + std::to_string(state.n_z) +
                          ") is degenerate at the expansion point");
  }
  return slopes[0];
}

}  // namespace ncosc
