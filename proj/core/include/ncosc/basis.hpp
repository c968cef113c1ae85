#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "ncosc/params.hpp"

namespace ncosc {

// Circular (chiral) oscillator labels. L_z = hbar (N_plus - N_minus), so
// mu = n_plus - n_minus and n_rho = min(n_plus, n_minus).
struct BasisState {
  int n_plus = 0;
  int n_minus = 0;
  int n_z = 0;

  int mu() const { return n_plus - n_minus; }
  int n_rho() const { return n_plus < n_minus ? n_plus : n_minus; }
  int n_xy() const { return n_plus + n_minus; }
  QuantumNumbers quantum_numbers() const { return {n_rho(), mu(), n_z}; }

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

// (n_rho, mu) <-> (n_plus, n_minus) bijection.
BasisState state_from_quantum_numbers(const QuantumNumbers& qn);

inline constexpr long kDefaultBasisCapacity = 20000;

// Number of states at the given cutoffs: (N_xy+1)(N_xy+2)/2 * (N_z+1).
long basis_size(int cutoff_xy, int cutoff_z);

// Deterministic enumeration ordered by ascending (n_plus+n_minus, n_z, mu).
class TruncatedBasis {
 public:
  TruncatedBasis() = default;
  TruncatedBasis(int cutoff_xy, int cutoff_z, long capacity = kDefaultBasisCapacity);

  int cutoff_xy() const { return cutoff_xy_; }
  int cutoff_z() const { return cutoff_z_; }
  int size() const { return static_cast<int>(states_.size()); }
  const BasisState& state(int i) const { return states_[i]; }
  const std::vector<BasisState>& states() const { return states_; }

  std::optional<int> find(const BasisState& s) const;
  // Index of s; throws StateOutOfBasis if absent.
  int index_of(const BasisState& s) const;

 private:
  int cutoff_xy_ = 0;
  int cutoff_z_ = 0;
  std::vector<BasisState> states_;
  std::map<std::tuple<int, int, int>, int> index_;
};

TruncatedBasis enumerate_basis(int cutoff_xy, int cutoff_z,
                               long capacity = kDefaultBasisCapacity);

}  // namespace ncosc
