#pragma once

#include <complex>
#include <vector>

#include "ncosc/operator_poly.hpp"
#include "ncosc/params.hpp"

namespace ncosc {

struct NumericMonomial {
  OpExponents ops{};
  std::complex<double> coeff;
};

// Operator polynomial with numeric coefficients; the bridge between the
// symbolic engine and the matrix engine. Terms are kept in a deterministic
// order keyed by operator exponents; exact zeros are pruned.
struct NumericOperatorPolynomial {
  std::vector<NumericMonomial> terms;
  int total_degree() const;
};

// Substitutes params into every symbol exponent. Throws NonFiniteCoefficient
// if a substituted coefficient overflows or divides by zero (e.g. alpha = 0
// against a negative exponent).
NumericOperatorPolynomial evaluate_coefficients(const OperatorPolynomial& a,
                                                const PhysicalParams& params);

}  // namespace ncosc
