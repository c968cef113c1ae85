#pragma once

#include "ncosc/bopp.hpp"
#include "ncosc/operator_poly.hpp"

namespace ncosc {

// Hard-coded reference right-hand sides for the expansion identities, kept in
// one place so the "reference side" of every comparison is auditable and
// separate from the engine. The quoted forms in reference_forms.cpp are the
// published expressions the engine is checked against; the engine never uses
// them for computation.
namespace reference {

// alpha^2 L_z + (theta/2 hbar)(-p_x^2 - p_y^2 + p_x p_z + p_y p_z)
//   + (eta/2 hbar)(-x^2 - y^2 + x z + y z)
//   + (theta eta / 4 alpha^2 hbar^2)(L_x + L_y + L_z)
OperatorPolynomial lz_expansion();

// alpha^2 (p_x^2 + p_y^2 + p_z^2) - (eta/hbar)(L_x + L_y + L_z)
//   + (eta^2 / 2 alpha^2 hbar^2)(x^2 - x y + y^2 - x z - y z + z^2)
OperatorPolynomial p_squared_expansion();

// alpha^2 (x^2 + y^2) + (theta/hbar)(-L_z + (x - y) p_z)
//   + (theta^2 / 4 alpha^2 hbar^2)(p_x^2 + p_y^2 + 2 p_z^2 - 2 p_x p_z - 2 p_y p_z)
OperatorPolynomial xy_squared_expansion();

// alpha^2 z^2 + (theta/hbar) z (p_y - p_x) + (theta^2 / 4 alpha^2 hbar^2)(p_x - p_y)^2
OperatorPolynomial z_squared_expansion();

// Reference part at (theta^j, eta^k) of the grouped expansion
//   H = alpha^2 H0 + (eta/hbar) H_eta + (theta/hbar) H_theta
//       + (eta theta/hbar^2) H_etatheta + (eta^2/hbar^2) H_eta2
//       + (theta^2/hbar^2) H_theta2,
// returned with theta^j eta^k factored out (matching collect_orders output).
// The (1,1) part carries the published +omega_c/(8 alpha^2) sign, which the
// engine expansion contradicts; that comparison is report data, not truth.
OperatorPolynomial group(const OrderKey& order);

}  // namespace reference

}  // namespace ncosc
