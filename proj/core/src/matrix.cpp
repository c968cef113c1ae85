#include "ncosc/matrix.hpp"

#include "ncosc/errors.hpp"

namespace ncosc {

SpectrumResult eigensolve(const HermitianMatrix& m, bool with_vectors) {
  const double scale = m.mat.size() == 0 ? 0.0 : m.mat.cwiseAbs().maxCoeff();
  if (m.hermiticity_defect > 1e-10 * std::max(scale, 1e-300)) {
    throw NonHermitianInput("hermiticity defect " + std::to_string(m.hermiticity_defect) +
                            " too large for max|A| = " + std::to_string(scale));
  }
  Eigen::MatrixXcd sym = 0.5 * (m.mat + m.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      sym, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("eigensolver did not converge");
  SpectrumResult r;
  r.eigenvalues = solver.eigenvalues();
  if (with_vectors) r.eigenvectors = solver.eigenvectors();
  r.basis = m.basis;
  r.has_vectors = with_vectors;
  return r;
}

}  // namespace ncosc
