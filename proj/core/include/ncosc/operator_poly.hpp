#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "ncosc/gaussian_rational.hpp"

namespace ncosc {

// Formal scalar symbols. omega_tilde is deliberately absent: it is always
// represented through its defining relation omega_tilde^2 = omega^2 + omega_c^2/4.
enum class Sym : int { hbar = 0, mass, omega, omega_c, alpha, theta, eta };
inline constexpr int kSymCount = 7;
using SymExponents = std::array<int, kSymCount>;  // Laurent: negative allowed

// Canonical operators. Normal order is positions before momenta,
// x < y < z within each group.
enum class Op : int { x = 0, y, z, p_x, p_y, p_z };
inline constexpr int kOpCount = 6;
using OpExponents = std::array<int, kOpCount>;  // nonnegative

const char* sym_name(Sym s);
const char* op_name(Op o);

struct MonomialKey {
  OpExponents ops{};
  SymExponents syms{};
  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
};

inline int total_op_degree(const OpExponents& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

// Canonical term order: by total operator degree, then operator exponents
// lexicographically, then symbol exponents lexicographically.
struct MonomialOrder {
  bool operator()(const MonomialKey& a, const MonomialKey& b) const {
    int da = total_op_degree(a.ops), db = total_op_degree(b.ops);
    if (da != db) return da < db;
    if (a.ops != b.ops) return a.ops < b.ops;
    return a.syms < b.syms;
  }
};

// Exact normal-ordered polynomial in the six canonical operators with
// Gaussian-rational x Laurent-symbol coefficients. Immutable value type in
// spirit: all operations return new polynomials.
class OperatorPolynomial {
 public:
  using TermMap = std::map<MonomialKey, GaussianRational, MonomialOrder>;

  OperatorPolynomial() = default;

  static OperatorPolynomial constant(const GaussianRational& c);
  static OperatorPolynomial symbol(Sym s, int exponent = 1);
  static OperatorPolynomial op(Op o, int exponent = 1);
  static OperatorPolynomial monomial(const GaussianRational& c, const SymExponents& syms,
                                     const OpExponents& ops);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Max over monomials of the total operator degree (0 for the zero polynomial).
  int total_degree() const;

  void add_term(const MonomialKey& key, const GaussianRational& c);

  OperatorPolynomial adjoint() const;

  std::string to_string() const;
  static std::string term_to_string(const MonomialKey& key, const GaussianRational& c);

  friend OperatorPolynomial operator+(const OperatorPolynomial& a, const OperatorPolynomial& b);
  friend OperatorPolynomial operator-(const OperatorPolynomial& a, const OperatorPolynomial& b);
  friend OperatorPolynomial operator-(const OperatorPolynomial& a);
  friend OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b);
  friend OperatorPolynomial operator*(const GaussianRational& c, const OperatorPolynomial& a);
  friend bool operator==(const OperatorPolynomial& a, const OperatorPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

// Normal-ordered noncommutative product. Reordering uses the closed form
//   p^m x^n = sum_k k! C(m,k) C(n,k) (-i hbar)^k x^(n-k) p^(m-k)
// independently per axis; operators on different axes commute.
OperatorPolynomial poly_mul(const OperatorPolynomial& a, const OperatorPolynomial& b);

// ab - ba.
OperatorPolynomial commutator(const OperatorPolynomial& a, const OperatorPolynomial& b);

}  // namespace ncosc
