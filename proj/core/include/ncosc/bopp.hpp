#pragma once

#include <map>
#include <utility>

#include "ncosc/operator_poly.hpp"

namespace ncosc {

// Image of a single canonical operator under the phase-space shift, e.g.
//   x -> alpha x - (theta/2 alpha hbar) p_y + (theta/2 alpha hbar) p_z.
OperatorPolynomial bopp_image(Op o);

// Applies the shift to every monomial, multiplying substituted factors
// noncommutatively in the monomial's normal order. Linear in its argument.
OperatorPolynomial bopp_shift(const OperatorPolynomial& a);

// Partitions monomials by their (theta, eta) exponents, factoring
// theta^j eta^k out of each part.
using OrderKey = std::pair<int, int>;  // (theta power, eta power)
std::map<OrderKey, OperatorPolynomial> collect_orders(const OperatorPolynomial& a);

// Inverse of collect_orders: sum of theta^j eta^k * part(j,k).
OperatorPolynomial reassemble(const std::map<OrderKey, OperatorPolynomial>& parts);

}  // namespace ncosc
