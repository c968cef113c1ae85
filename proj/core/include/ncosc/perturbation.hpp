#pragma once

#include <vector>

#include "ncosc/assemble.hpp"

namespace ncosc {

struct PTResult {
  // First-order correction per basis state. Within a degeneracy cluster the
  // values are the eigenvalues of the V-block restricted to the cluster: if
  // the block is numerically diagonal they stay attached to their states,
  // otherwise the sorted eigenvalues are assigned in basis-index order.
  std::vector<double> corrections;
  std::vector<int> cluster_of;
  std::vector<std::vector<int>> clusters;                // member indices, ascending
  std::vector<std::vector<double>> cluster_eigenvalues;  // ascending per cluster
};

// Degenerate-aware first-order perturbation theory. States whose unperturbed
// energies differ by less than deg_tol * hbar * omega_tilde are clustered.
PTResult first_order_pt(const Eigen::VectorXd& h0diag, const HermitianMatrix& V,
                        const PhysicalParams& params, double deg_tol = 1e-8);

// Full symbolic phase-space expansion of H0 (all theta/eta orders); cached,
// parameter-free.
const OperatorPolynomial& expanded_hamiltonian();

// Diagonalization of the complete expansion at the given parameters.
SpectrumResult full_spectrum(const PhysicalParams& params, int cutoff_xy, int cutoff_z,
                             bool with_vectors = false, long capacity = kDefaultBasisCapacity);

enum class NcChannel { Theta, Eta };

struct FdOptions {
  double h = 1e-4;       // base step in natural units
  int levels = 2;        // Richardson extrapolation levels
  double deg_tol = 1e-8;
  double min_overlap = 0.9;
};

// dE/d(channel) at channel = 0, with the other non-commutativity parameter
// forced to zero. Central differences, Richardson-extrapolated; the
// eigenstate is tracked across parameter steps by maximal overlap with the
// unperturbed basis vector. Throws DegenerateState when the state fails the
// degeneracy pre-check, TrackingLost when the overlap falls below threshold.
double fd_slope(const PhysicalParams& params, NcChannel channel, const BasisState& state,
                int cutoff_xy, int cutoff_z, const FdOptions& opts = {});

// Batch variant sharing the 2*levels diagonalizations across states.
// Returns NaN for states failing the degeneracy pre-check.
std::vector<double> fd_slopes(const PhysicalParams& params, NcChannel channel,
                              const std::vector<BasisState>& states, int cutoff_xy, int cutoff_z,
                              const FdOptions& opts = {});

}  // namespace ncosc
