#include "ncosc/bopp.hpp"

namespace ncosc {

namespace {

// theta/(2 alpha hbar) or eta/(2 alpha hbar) times the given sign, attached
// to a single canonical operator.
OperatorPolynomial shift_term(Sym small, int sign, Op target) {
  SymExponents syms{};
  syms[static_cast<int>(small)] = 1;
  syms[static_cast<int>(Sym::alpha)] = -1;
  syms[static_cast<int>(Sym::hbar)] = -1;
  OpExponents ops{};
  ops[static_cast<int>(target)] = 1;
  return OperatorPolynomial::monomial(GaussianRational::ratio(sign, 2), syms, ops);
}

OperatorPolynomial alpha_times(Op o) {
  SymExponents syms{};
  syms[static_cast<int>(Sym::alpha)] = 1;
  OpExponents ops{};
  ops[static_cast<int>(o)] = 1;
  return OperatorPolynomial::monomial(GaussianRational(1), syms, ops);
}

}  // namespace

OperatorPolynomial bopp_image(Op o) {
  using enum Op;
  switch (o) {
    case x:
      return alpha_times(x) + shift_term(Sym::theta, -1, p_y) + shift_term(Sym::theta, +1, p_z);
    case y:
      return alpha_times(y) + shift_term(Sym::theta, -1, p_z) + shift_term(Sym::theta, +1, p_x);
    case z:
      return alpha_times(z) + shift_term(Sym::theta, -1, p_x) + shift_term(Sym::theta, +1, p_y);
    case p_x:
      return alpha_times(p_x) + shift_term(Sym::eta, +1, y) + shift_term(Sym::eta, -1, z);
    case p_y:
      return alpha_times(p_y) + shift_term(Sym::eta, +1, z) + shift_term(Sym::eta, -1, x);
    case p_z:
      return alpha_times(p_z) + shift_term(Sym::eta, +1, x) + shift_term(Sym::eta, -1, y);
  }
  return {};
}

OperatorPolynomial bopp_shift(const OperatorPolynomial& a) {
  OperatorPolynomial out;
  for (const auto& [key, c] : a.terms()) {
    OperatorPolynomial word = OperatorPolynomial::monomial(c, key.syms, OpExponents{});
    for (int o = 0; o < kOpCount; ++o) {
      const OperatorPolynomial& image = bopp_image(static_cast<Op>(o));
      for (int e = 0; e < key.ops[o]; ++e) word = poly_mul(word, image);
    }
    out = out + word;
  }
  return out;
}

std::map<OrderKey, OperatorPolynomial> collect_orders(const OperatorPolynomial& a) {
  std::map<OrderKey, OperatorPolynomial> parts;
  const int ti = static_cast<int>(Sym::theta);
  const int ei = static_cast<int>(Sym::eta);
  for (const auto& [key, c] : a.terms()) {
    OrderKey order{key.syms[ti], key.syms[ei]};
    MonomialKey stripped = key;
    stripped.syms[ti] = 0;
    stripped.syms[ei] = 0;
    parts[order].add_term(stripped, c);
  }
  return parts;
}

OperatorPolynomial reassemble(const std::map<OrderKey, OperatorPolynomial>& parts) {
  OperatorPolynomial out;
  for (const auto& [order, part] : parts) {
    for (const auto& [key, c] : part.terms()) {
      MonomialKey restored = key;
      restored.syms[static_cast<int>(Sym::theta)] += order.first;
      restored.syms[static_cast<int>(Sym::eta)] += order.second;
      out.add_term(restored, c);
    }
  }
  return out;
}

}  // namespace ncosc
