#include "ncosc/operator_poly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

namespace ncosc {

const char* sym_name(Sym s) {
  static const char* names[kSymCount] = {"hbar", "m", "omega", "omega_c", "alpha", "theta", "eta"};
  return names[static_cast<int>(s)];
}

const char* op_name(Op o) {
  static const char* names[kOpCount] = {"x", "y", "z", "p_x", "p_y", "p_z"};
  return names[static_cast<int>(o)];
}

OperatorPolynomial OperatorPolynomial::constant(const GaussianRational& c) {
  OperatorPolynomial p;
  p.add_term(MonomialKey{}, c);
  return p;
}

OperatorPolynomial OperatorPolynomial::symbol(Sym s, int exponent) {
  MonomialKey key;
  key.syms[static_cast<int>(s)] = exponent;
  OperatorPolynomial p;
  p.add_term(key, GaussianRational(1));
  return p;
}

OperatorPolynomial OperatorPolynomial::op(Op o, int exponent) {
  MonomialKey key;
  key.ops[static_cast<int>(o)] = exponent;
  OperatorPolynomial p;
  p.add_term(key, GaussianRational(1));
  return p;
}

OperatorPolynomial OperatorPolynomial::monomial(const GaussianRational& c, const SymExponents& syms,
                                                const OpExponents& ops) {
  OperatorPolynomial p;
  p.add_term(MonomialKey{ops, syms}, c);
  return p;
}

void OperatorPolynomial::add_term(const MonomialKey& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int OperatorPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, total_op_degree(key.ops));
  return d;
}

OperatorPolynomial operator+(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  OperatorPolynomial r = a;
  for (const auto& [key, c] : b.terms_) r.add_term(key, c);
  return r;
}

OperatorPolynomial operator-(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  OperatorPolynomial r = a;
  for (const auto& [key, c] : b.terms_) r.add_term(key, -c);
  return r;
}

OperatorPolynomial operator-(const OperatorPolynomial& a) {
  OperatorPolynomial r;
  for (const auto& [key, c] : a.terms_) r.add_term(key, -c);
  return r;
}

OperatorPolynomial operator*(const GaussianRational& c, const OperatorPolynomial& a) {
  OperatorPolynomial r;
  for (const auto& [key, k] : a.terms_) r.add_term(key, c * k);
  return r;
}

namespace {

// i^(-k) cycle for the (-i)^k factor of the reordering identity.
GaussianRational minus_i_pow(int k) {
  switch (k & 3) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::imaginary(-1);
    case 2: return GaussianRational(-1);
    default: return GaussianRational::imaginary(1);
  }
}

mpz_class binom_uu(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

// Accumulates (A-monomial) * (B-monomial) into out. The momentum block of A
// is commuted through the position block of B one axis at a time:
//   p^m x^n = sum_k k! C(m,k) C(n,k) (-i hbar)^k x^(n-k) p^(m-k).
void mul_monomial(const MonomialKey& a, const GaussianRational& ca, const MonomialKey& b,
                  const GaussianRational& cb, OperatorPolynomial& out) {
  const int m[3] = {a.ops[3], a.ops[4], a.ops[5]};  // A momenta
  const int n[3] = {b.ops[0], b.ops[1], b.ops[2]};  // B positions

  SymExponents syms;
  for (int s = 0; s < kSymCount; ++s) syms[s] = a.syms[s] + b.syms[s];

  const GaussianRational cab = ca * cb;
  for (int kx = 0; kx <= std::min(m[0], n[0]); ++kx) {
    for (int ky = 0; ky <= std::min(m[1], n[1]); ++ky) {
      for (int kz = 0; kz <= std::min(m[2], n[2]); ++kz) {
        const int k[3] = {kx, ky, kz};
        mpz_class count = 1;
        for (int ax = 0; ax < 3; ++ax) {
          auto ka = static_cast<unsigned long>(k[ax]);
          count *= factorial(ka) * binom_uu(m[ax], ka) * binom_uu(n[ax], ka);
        }
        const int ktot = kx + ky + kz;

        MonomialKey key;
        for (int ax = 0; ax < 3; ++ax) {
          key.ops[ax] = a.ops[ax] + b.ops[ax] - k[ax];
          key.ops[ax + 3] = a.ops[ax + 3] + b.ops[ax + 3] - k[ax];
        }
        key.syms = syms;
        key.syms[static_cast<int>(Sym::hbar)] += ktot;

        GaussianRational coeff = cab * minus_i_pow(ktot) * GaussianRational(mpq_class(count));
        out.add_term(key, coeff);
      }
    }
  }
}

}  // namespace

OperatorPolynomial poly_mul(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  OperatorPolynomial out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      mul_monomial(ka, ca, kb, cb, out);
    }
  }
  return out;
}

OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  return poly_mul(a, b);
}

OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  return poly_mul(a, b) - poly_mul(b, a);
}

OperatorPolynomial OperatorPolynomial::adjoint() const {
  OperatorPolynomial out;
  for (const auto& [key, c] : terms_) {
    // (X P)^dagger = P X; each factor is self-adjoint and the coefficient
    // conjugates. Re-normal-order the momentum-first word.
    MonomialKey pkey, xkey;
    for (int ax = 0; ax < 3; ++ax) {
      pkey.ops[ax + 3] = key.ops[ax + 3];
      xkey.ops[ax] = key.ops[ax];
    }
    xkey.syms = key.syms;
    mul_monomial(pkey, c.conj(), xkey, GaussianRational(1), out);
  }
  return out;
}

std::string OperatorPolynomial::term_to_string(const MonomialKey& key, const GaussianRational& c) {
  std::ostringstream os;
  // Coefficient: rational part in parentheses, pure-imaginary as (q)*i,
  // mixed values carried whole inside the parentheses.
  if (c.is_real()) {
    os << "(" << c.real().get_str() << ")";
  } else if (c.real() == 0) {
    os << "(" << c.imag().get_str() << ")*i";
  } else {
    os << "(" << c.to_string() << ")";
  }
  for (int s = 0; s < kSymCount; ++s) {
    if (key.syms[s] == 0) continue;
    os << "*" << sym_name(static_cast<Sym>(s));
    if (key.syms[s] != 1) os << "^" << key.syms[s];
  }
  bool first_op = true;
  for (int o = 0; o < kOpCount; ++o) {
    if (key.ops[o] == 0) continue;
    os << (first_op ? " * " : " ");
    first_op = false;
    os << op_name(static_cast<Op>(o)) << "^" << key.ops[o];
  }
  return os.str();
}

std::string OperatorPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << term_to_string(key, c);
  }
  return os.str();
}

}  // namespace ncosc
