// Reference expansion forms, hard-coded once. Each builder's comment quotes
// the source expression verbatim (in plain TeX-ish notation); the code below
// it is a literal transcription. omega_tilde^2 is always written out as
// omega^2 + omega_c^2/4.

#include "ncosc/reference_forms.hpp"

#include "ncosc/hamiltonians.hpp"

namespace ncosc::reference {

namespace {

using ops::L_x;
using ops::L_y;
using ops::L_z;

GaussianRational q(long n, long d) { return GaussianRational::ratio(n, d); }

// c * hbar^he * alpha^ae * (small symbol)^se * poly
OperatorPolynomial coeff(const GaussianRational& c, int hbar_exp, int alpha_exp, Sym small,
                         int small_exp, const OperatorPolynomial& p) {
  SymExponents se{};
  se[static_cast<int>(Sym::hbar)] = hbar_exp;
  se[static_cast<int>(Sym::alpha)] = alpha_exp;
  se[static_cast<int>(small)] = small_exp;
  return poly_mul(OperatorPolynomial::monomial(c, se, OpExponents{}), p);
}

OperatorPolynomial sym_factor(std::initializer_list<std::pair<Sym, int>> syms,
                              const GaussianRational& c) {
  SymExponents se{};
  for (auto [s, e] : syms) se[static_cast<int>(s)] += e;
  return OperatorPolynomial::monomial(c, se, OpExponents{});
}

OperatorPolynomial mono(std::initializer_list<std::pair<Op, int>> factors, long num = 1,
                        long den = 1) {
  OpExponents oe{};
  for (auto [o, e] : factors) oe[static_cast<int>(o)] += e;
  return OperatorPolynomial::monomial(q(num, den), SymExponents{}, oe);
}

// -p_x^2 - p_y^2 + p_x p_z + p_y p_z
OperatorPolynomial momentum_cross() {
  return mono({{Op::p_x, 2}}, -1) + mono({{Op::p_y, 2}}, -1) + mono({{Op::p_x, 1}, {Op::p_z, 1}}) +
         mono({{Op::p_y, 1}, {Op::p_z, 1}});
}

// -x^2 - y^2 + x z + y z
OperatorPolynomial position_cross() {
  return mono({{Op::x, 2}}, -1) + mono({{Op::y, 2}}, -1) + mono({{Op::x, 1}, {Op::z, 1}}) +
         mono({{Op::y, 1}, {Op::z, 1}});
}

// x^2 - x y + y^2 - x z - y z + z^2
OperatorPolynomial symmetric_quadratic() {
  return mono({{Op::x, 2}}) + mono({{Op::x, 1}, {Op::y, 1}}, -1) + mono({{Op::y, 2}}) +
         mono({{Op::x, 1}, {Op::z, 1}}, -1) + mono({{Op::y, 1}, {Op::z, 1}}, -1) +
         mono({{Op::z, 2}});
}

// p_x^2 + p_y^2 + 2 p_z^2 - 2 p_x p_z - 2 p_y p_z
OperatorPolynomial momentum_quadratic() {
  return mono({{Op::p_x, 2}}) + mono({{Op::p_y, 2}}) + mono({{Op::p_z, 2}}, 2) +
         mono({{Op::p_x, 1}, {Op::p_z, 1}}, -2) + mono({{Op::p_y, 1}, {Op::p_z, 1}}, -2);
}

// -L_z + (x - y) p_z
OperatorPolynomial lz_shear() {
  return -L_z() + mono({{Op::x, 1}, {Op::p_z, 1}}) + mono({{Op::y, 1}, {Op::p_z, 1}}, -1);
}

// z (p_y - p_x)
OperatorPolynomial z_shear() {
  return mono({{Op::z, 1}, {Op::p_y, 1}}) + mono({{Op::z, 1}, {Op::p_x, 1}}, -1);
}

// (p_x - p_y)^2 = p_x^2 + p_y^2 - 2 p_x p_y
OperatorPolynomial px_minus_py_squared() {
  return mono({{Op::p_x, 2}}) + mono({{Op::p_y, 2}}) + mono({{Op::p_x, 1}, {Op::p_y, 1}}, -2);
}

OperatorPolynomial angular_sum() { return L_x() + L_y() + L_z(); }

// H_eta = -(1/2m)(L_x + L_y + L_z) - (omega_c/4)(-x^2 - y^2 + x z + y z)
OperatorPolynomial h_eta() {
  return poly_mul(sym_factor({{Sym::mass, -1}}, q(-1, 2)), angular_sum()) +
         poly_mul(sym_factor({{Sym::omega_c, 1}}, q(-1, 4)), position_cross());
}

// H_theta = -(omega_c/4)(-p_x^2 - p_y^2 + p_x p_z + p_y p_z)
//           + (1/2) m omega_tilde^2 (-L_z + (x - y) p_z)
//           + (1/2) m omega^2 z (p_y - p_x)
OperatorPolynomial h_theta() {
  OperatorPolynomial h = poly_mul(sym_factor({{Sym::omega_c, 1}}, q(-1, 4)), momentum_cross());
  h = h + poly_mul(sym_factor({{Sym::mass, 1}, {Sym::omega, 2}}, q(1, 2)), lz_shear());
  h = h + poly_mul(sym_factor({{Sym::mass, 1}, {Sym::omega_c, 2}}, q(1, 8)), lz_shear());
  h = h + poly_mul(sym_factor({{Sym::mass, 1}, {Sym::omega, 2}}, q(1, 2)), z_shear());
  return h;
}

// H_etatheta = +(omega_c / 8 alpha^2)(L_x + L_y + L_z)   [published sign]
OperatorPolynomial h_etatheta() {
  return poly_mul(sym_factor({{Sym::omega_c, 1}, {Sym::alpha, -2}}, q(1, 8)), angular_sum());
}

// H_eta2 = (1 / 4 m alpha^2)(x^2 - x y + y^2 - x z - y z + z^2)
OperatorPolynomial h_eta2() {
  return poly_mul(sym_factor({{Sym::mass, -1}, {Sym::alpha, -2}}, q(1, 4)), symmetric_quadratic());
}

// H_theta2 = (1 / 4 alpha^2) [ (1/2) m omega_tilde^2
//              (p_x^2 + p_y^2 + 2 p_z^2 - 2 p_x p_z - 2 p_y p_z)
//              + (1/2) m omega^2 (p_x - p_y)^2 ]
OperatorPolynomial h_theta2() {
  OperatorPolynomial inner =
      poly_mul(sym_factor({{Sym::mass, 1}, {Sym::omega, 2}}, q(1, 2)), momentum_quadratic()) +
      poly_mul(sym_factor({{Sym::mass, 1}, {Sym::omega_c, 2}}, q(1, 8)), momentum_quadratic()) +
      poly_mul(sym_factor({{Sym::mass, 1}, {Sym::omega, 2}}, q(1, 2)), px_minus_py_squared());
  return poly_mul(sym_factor({{Sym::alpha, -2}}, q(1, 4)), inner);
}

}  // namespace

// L_z_hat = alpha^2 L_z + (theta/2 hbar)(-p_x^2 - p_y^2 + p_x p_z + p_y p_z)
//   + (eta/2 hbar)(-x^2 - y^2 + x z + y z)
//   + (theta eta / 4 alpha^2 hbar^2)(L_x + L_y + L_z)
OperatorPolynomial lz_expansion() {
  OperatorPolynomial r = poly_mul(sym_factor({{Sym::alpha, 2}}, q(1, 1)), L_z());
  r = r + coeff(q(1, 2), -1, 0, Sym::theta, 1, momentum_cross());
  r = r + coeff(q(1, 2), -1, 0, Sym::eta, 1, position_cross());
  r = r + poly_mul(sym_factor({{Sym::theta, 1}, {Sym::eta, 1}, {Sym::alpha, -2}, {Sym::hbar, -2}},
                              q(1, 4)),
                   angular_sum());
  return r;
}

// p_hat^2 = alpha^2 (p_x^2 + p_y^2 + p_z^2) - (eta/hbar)(L_x + L_y + L_z)
//   + (eta^2 / 2 alpha^2 hbar^2)(x^2 - x y + y^2 - x z - y z + z^2)
OperatorPolynomial p_squared_expansion() {
  OperatorPolynomial r = poly_mul(sym_factor({{Sym::alpha, 2}}, q(1, 1)), ops::p_squared());
  r = r + coeff(q(-1, 1), -1, 0, Sym::eta, 1, angular_sum());
  r = r + coeff(q(1, 2), -2, -2, Sym::eta, 2, symmetric_quadratic());
  return r;
}

// x_hat^2 + y_hat^2 = alpha^2 (x^2 + y^2) + (theta/hbar)(-L_z + (x - y) p_z)
//   + (theta^2 / 4 alpha^2 hbar^2)(p_x^2 + p_y^2 + 2 p_z^2 - 2 p_x p_z - 2 p_y p_z)
OperatorPolynomial xy_squared_expansion() {
  OperatorPolynomial r = poly_mul(sym_factor({{Sym::alpha, 2}}, q(1, 1)), ops::xy_squared());
  r = r + coeff(q(1, 1), -1, 0, Sym::theta, 1, lz_shear());
  r = r + coeff(q(1, 4), -2, -2, Sym::theta, 2, momentum_quadratic());
  return r;
}

// z_hat^2 = alpha^2 z^2 + (theta/hbar) z (p_y - p_x)
//   + (theta^2 / 4 alpha^2 hbar^2)(p_x - p_y)^2
OperatorPolynomial z_squared_expansion() {
  OperatorPolynomial r = poly_mul(sym_factor({{Sym::alpha, 2}}, q(1, 1)), ops::z_squared());
  r = r + coeff(q(1, 1), -1, 0, Sym::theta, 1, z_shear());
  r = r + coeff(q(1, 4), -2, -2, Sym::theta, 2, px_minus_py_squared());
  return r;
}

OperatorPolynomial group(const OrderKey& order) {
  const auto [j, k] = order;  // theta power, eta power
  if (j == 0 && k == 0) return poly_mul(sym_factor({{Sym::alpha, 2}}, q(1, 1)), ops::H0());
  if (j == 0 && k == 1) return poly_mul(sym_factor({{Sym::hbar, -1}}, q(1, 1)), h_eta());
  if (j == 1 && k == 0) return poly_mul(sym_factor({{Sym::hbar, -1}}, q(1, 1)), h_theta());
  if (j == 1 && k == 1) return poly_mul(sym_factor({{Sym::hbar, -2}}, q(1, 1)), h_etatheta());
  if (j == 0 && k == 2) return poly_mul(sym_factor({{Sym::hbar, -2}}, q(1, 1)), h_eta2());
  if (j == 2 && k == 0) return poly_mul(sym_factor({{Sym::hbar, -2}}, q(1, 1)), h_theta2());
  return {};
}

}  // namespace ncosc::reference
