#pragma once

#include <gmpxx.h>

#include <optional>

#include "ncosc/params.hpp"

namespace ncosc {

// Printed closed form of the unperturbed levels:
//   alpha^2 [ hbar omega_tilde (2 n_rho + |mu| + 1) + (1/2) hbar omega_c mu
//             + hbar omega (n_z + 1/2) ].
// Note the numeric engine's H0 is diagonal with the OPPOSITE sign of the
// omega_c mu term on its own labels (L_z = hbar(N_plus - N_minus)); the two
// agree as multisets under mu -> -mu. See verify's conventions block.
double unperturbed_energy(const QuantumNumbers& qn, const PhysicalParams& p);

// Generalized binomial: C(n,k) = n(n-1)...(n-k+1)/k! for k >= 0, else 0.
mpq_class generalized_binomial(long n, long k);

// The five-binomial combination entering the reference Delta E_theta:
//   f(n_rho, mu) = 2 C(n_rho+mu, mu) - 4 mu C(mu+n_rho+2, n_rho-1)
//                  - mu(1+mu) [ 2 C(mu+n_rho, n_rho) + 4 C(mu+n_rho-2, n_rho)
//                               + C(mu+n_rho+1, n_rho) - C(mu+n_rho+2, n_rho-1) ]
// evaluated under the generalized-binomial convention above.
mpq_class paper_f_exact(long n_rho, long mu_abs);
double paper_f(long n_rho, long mu_abs);

struct Corrections {
  double dE_eta = 0.0;
  double dE_theta = 0.0;
};

// Reference (printed) first-order corrections:
//   Delta E_eta   = -eta |mu| / (2m) - eta omega_c (2 n_rho + |mu| + 1) / (4 m omega_tilde)
//   Delta E_theta = -(1/2) theta m omega_tilde (omega_tilde - (1/2) omega_c f(n_rho, |mu|))
Corrections paper_corrections(const QuantumNumbers& qn, const PhysicalParams& p);

// Independently derived first-order corrections, validated against the
// numeric engine (first_order_pt / expectation) before being frozen here:
//   Delta E_eta   = eta [ -mu/(2m) + omega_c (2 n_rho + |mu| + 1) / (4 m omega_tilde) ]
//   Delta E_theta = theta m [ (omega_c omega_tilde / 4)(2 n_rho + |mu| + 1)
//                             - (omega_tilde^2 / 2) mu ]
// mu here is the numeric engine's label (L_z eigenvalue hbar mu).
Corrections derived_corrections(const QuantumNumbers& qn, const PhysicalParams& p);

// Smallness ratios of the first-order treatment: r_eta = eta/(hbar m |omega_c|)
// (undefined at omega_c = 0), r_theta = theta m omega_tilde / hbar.
struct ValidityRatios {
  std::optional<double> r_eta;
  double r_theta = 0.0;
};
ValidityRatios validity_ratios(const PhysicalParams& p);

}  // namespace ncosc
