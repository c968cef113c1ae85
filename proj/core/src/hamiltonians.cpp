#include "ncosc/hamiltonians.hpp"

namespace ncosc::ops {

namespace {

OperatorPolynomial pair_term(int sign, Op a, Op b) {
  OpExponents e{};
  e[static_cast<int>(a)] += 1;
  e[static_cast<int>(b)] += 1;
  return OperatorPolynomial::monomial(GaussianRational(sign), SymExponents{}, e);
}

// c * sym-monomial * operator polynomial
OperatorPolynomial scaled(const GaussianRational& c, std::initializer_list<std::pair<Sym, int>> syms,
                          const OperatorPolynomial& p) {
  SymExponents se{};
  for (auto [s, e] : syms) se[static_cast<int>(s)] += e;
  return poly_mul(OperatorPolynomial::monomial(c, se, OpExponents{}), p);
}

}  // namespace

OperatorPolynomial x() { return OperatorPolynomial::op(Op::x); }
OperatorPolynomial y() { return OperatorPolynomial::op(Op::y); }
OperatorPolynomial z() { return OperatorPolynomial::op(Op::z); }
OperatorPolynomial p_x() { return OperatorPolynomial::op(Op::p_x); }
OperatorPolynomial p_y() { return OperatorPolynomial::op(Op::p_y); }
OperatorPolynomial p_z() { return OperatorPolynomial::op(Op::p_z); }

OperatorPolynomial L_x() { return pair_term(+1, Op::y, Op::p_z) + pair_term(-1, Op::z, Op::p_y); }
OperatorPolynomial L_y() { return pair_term(+1, Op::z, Op::p_x) + pair_term(-1, Op::x, Op::p_z); }
OperatorPolynomial L_z() { return pair_term(+1, Op::x, Op::p_y) + pair_term(-1, Op::y, Op::p_x); }

OperatorPolynomial p_squared() {
  return OperatorPolynomial::op(Op::p_x, 2) + OperatorPolynomial::op(Op::p_y, 2) +
         OperatorPolynomial::op(Op::p_z, 2);
}

OperatorPolynomial xy_squared() {
  return OperatorPolynomial::op(Op::x, 2) + OperatorPolynomial::op(Op::y, 2);
}

OperatorPolynomial z_squared() { return OperatorPolynomial::op(Op::z, 2); }

OperatorPolynomial H0() {
  OperatorPolynomial h = scaled(GaussianRational::ratio(1, 2), {{Sym::mass, -1}}, p_squared());
  h = h + scaled(GaussianRational::ratio(-1, 2), {{Sym::omega_c, 1}}, L_z());
  h = h + scaled(GaussianRational::ratio(1, 2), {{Sym::mass, 1}, {Sym::omega, 2}}, xy_squared());
  h = h + scaled(GaussianRational::ratio(1, 8), {{Sym::mass, 1}, {Sym::omega_c, 2}}, xy_squared());
  h = h + scaled(GaussianRational::ratio(1, 2), {{Sym::mass, 1}, {Sym::omega, 2}}, z_squared());
  return h;
}

}  // namespace ncosc::ops
