#pragma once

#include "ncosc/operator_poly.hpp"

namespace ncosc {

// Symbolic builders for the operators of the charged oscillator in a
// constant axial magnetic field. All are exact OperatorPolynomials over the
// formal symbols; nothing here is numeric.
namespace ops {

OperatorPolynomial x();
OperatorPolynomial y();
OperatorPolynomial z();
OperatorPolynomial p_x();
OperatorPolynomial p_y();
OperatorPolynomial p_z();

OperatorPolynomial L_x();  // y p_z - z p_y
OperatorPolynomial L_y();  // z p_x - x p_z
OperatorPolynomial L_z();  // x p_y - y p_x

OperatorPolynomial p_squared();   // p_x^2 + p_y^2 + p_z^2
OperatorPolynomial xy_squared();  // x^2 + y^2
OperatorPolynomial z_squared();   // z^2

// (1/2m) p^2 - (omega_c/2) L_z + (m/2)(omega^2 + omega_c^2/4)(x^2+y^2)
//   + (m omega^2/2) z^2
// The in-plane frequency is always kept expanded: omega^2 + omega_c^2/4.
OperatorPolynomial H0();

}  // namespace ops

}  // namespace ncosc
