#pragma once

#include "ncosc/matrix.hpp"
#include "ncosc/numeric_poly.hpp"

namespace ncosc {

// Matrix of a single canonical operator on the given basis. Ladder
// representation with reference frequencies omega_tilde (x, y) and omega (z):
//   x   = sqrt(hbar/(4 m wt)) (a+ + a- + a+^ + a-^)
//   y   = i sqrt(hbar/(4 m wt)) (a+ - a- - a+^ + a-^)
//   p_x = i sqrt(m hbar wt/4) (a+^ + a-^ - a+ - a-)
//   p_y =   sqrt(m hbar wt/4) (a+^ - a-^ + a+ - a-)
//   z   = sqrt(hbar/(2 m w)) (az + az^),  p_z = i sqrt(m hbar w/2) (az^ - az)
// which gives L_z = hbar (N_plus - N_minus). The reference frequencies never
// depend on theta/eta: the perturbation changes matrices, not the basis.
Eigen::MatrixXcd elementary_matrix(Op op, const TruncatedBasis& basis,
                                   const PhysicalParams& params);

// Matrix of a numeric operator polynomial. Each monomial is applied to every
// basis column through exact ladder action on number states, keeping all
// intermediate amplitudes (equivalent to computing products on a basis
// enlarged by the polynomial degree and projecting) — matrix elements are
// truncation-exact. Throws CapacityExceeded when the degree-padded basis
// would exceed `capacity`.
HermitianMatrix assemble(const NumericOperatorPolynomial& poly, const TruncatedBasis& basis,
                         const PhysicalParams& params, long capacity = kDefaultBasisCapacity);

// <s|V|s> (real part; imaginary part is bounded by the hermiticity defect).
// Throws StateOutOfBasis.
double expectation(const HermitianMatrix& V, const BasisState& s);

// Diagonal of the unperturbed Hamiltonian on the engine's own labels:
//   alpha^2 [ hbar wt (n_plus + n_minus + 1) - (hbar omega_c/2)(n_plus - n_minus)
//             + hbar omega (n_z + 1/2) ].
Eigen::VectorXd h0_diagonal(const TruncatedBasis& basis, const PhysicalParams& params);

}  // namespace ncosc
