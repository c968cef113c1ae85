#include "ncosc/basis.hpp"

#include <string>

#include "ncosc/errors.hpp"

namespace ncosc {

BasisState state_from_quantum_numbers(const QuantumNumbers& qn) {
  BasisState s;
  s.n_plus = qn.n_rho + (qn.mu > 0 ? qn.mu : 0);
  s.n_minus = qn.n_rho + (qn.mu < 0 ? -qn.mu : 0);
  s.n_z = qn.n_z;
  return s;
}

long basis_size(int cutoff_xy, int cutoff_z) {
  return static_cast<long>(cutoff_xy + 1) * (cutoff_xy + 2) / 2 * (cutoff_z + 1);
}

TruncatedBasis::TruncatedBasis(int cutoff_xy, int cutoff_z, long capacity)
    : cutoff_xy_(cutoff_xy), cutoff_z_(cutoff_z) {
  if (cutoff_xy < 0 || cutoff_z < 0) throw ConfigError("basis cutoffs must be nonnegative");
  const long n = basis_size(cutoff_xy, cutoff_z);
  if (n > capacity) {
    throw CapacityExceeded("basis of " + std::to_string(n) + " states exceeds capacity " +
                           std::to_string(capacity));
  }
  states_.reserve(static_cast<std::size_t>(n));
  for (int nxy = 0; nxy <= cutoff_xy; ++nxy) {
    for (int nz = 0; nz <= cutoff_z; ++nz) {
      for (int mu = -nxy; mu <= nxy; mu += 2) {
        BasisState s{(nxy + mu) / 2, (nxy - mu) / 2, nz};
        index_.emplace(std::make_tuple(s.n_plus, s.n_minus, s.n_z),
                       static_cast<int>(states_.size()));
        states_.push_back(s);
      }
    }
  }
}

std::optional<int> TruncatedBasis::find(const BasisState& s) const {
  auto it = index_.find(std::make_tuple(s.n_plus, s.n_minus, s.n_z));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int TruncatedBasis::index_of(const BasisState& s) const {
  auto idx = find(s);
  if (!idx) {
    throw StateOutOfBasis("state (" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) +
                          "," + std::to_string(s.n_z) + ") not in basis");
  }
  return *idx;
}

TruncatedBasis enumerate_basis(int cutoff_xy, int cutoff_z, long capacity) {
  return {cutoff_xy, cutoff_z, capacity};
}

}  // namespace ncosc
