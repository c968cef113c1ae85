#pragma once

#include <Eigen/Dense>

#include "ncosc/basis.hpp"

namespace ncosc {

// Dense complex matrix in a truncated basis, carrying the measured
// hermiticity defect max|A - A^dagger| from assembly.
struct HermitianMatrix {
  Eigen::MatrixXcd mat;
  TruncatedBasis basis;
  double hermiticity_defect = 0.0;
};

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // columns, empty unless requested
  TruncatedBasis basis;
  bool has_vectors = false;
};

// Full dense eigendecomposition. Throws NonHermitianInput when the recorded
// defect exceeds 1e-10 * max|A|, ConvergenceFailure on solver failure.
SpectrumResult eigensolve(const HermitianMatrix& m, bool with_vectors = false);

}  // namespace ncosc
