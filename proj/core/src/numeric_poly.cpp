#include "ncosc/numeric_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ncosc/errors.hpp"

namespace ncosc {

int NumericOperatorPolynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, total_op_degree(t.ops));
  return d;
}

NumericOperatorPolynomial evaluate_coefficients(const OperatorPolynomial& a,
                                                const PhysicalParams& params) {
  std::map<OpExponents, std::complex<double>> acc;
  for (const auto& [key, c] : a.terms()) {
    double factor = 1.0;
    for (int s = 0; s < kSymCount; ++s) {
      if (key.syms[s] == 0) continue;
      factor *= std::pow(sym_value(params, static_cast<Sym>(s)), key.syms[s]);
    }
    std::complex<double> coeff = c.to_complex() * factor;
    if (!std::isfinite(coeff.real()) || !std::isfinite(coeff.imag())) {
      throw NonFiniteCoefficient("non-finite coefficient for term " +
                                 OperatorPolynomial::term_to_string(key, c));
    }
    acc[key.ops] += coeff;
  }
  NumericOperatorPolynomial out;
  out.terms.reserve(acc.size());
  for (const auto& [ops, coeff] : acc) {
    if (coeff == std::complex<double>(0.0, 0.0)) continue;
    out.terms.push_back({ops, coeff});
  }
  return out;
}

}  // namespace ncosc
