#include "ncosc/model.hpp"

#include <cmath>
#include <cstdlib>

namespace ncosc {

double unperturbed_energy(const QuantumNumbers& qn, const PhysicalParams& p) {
  const double wt = omega_tilde(p);
  const double radial = p.hbar * wt * (2 * qn.n_rho + std::abs(qn.mu) + 1);
  const double angular = 0.5 * p.hbar * p.omega_c * qn.mu;
  const double axial = p.hbar * p.omega * (qn.n_z + 0.5);
  return p.alpha * p.alpha * (radial + angular + axial);
}

mpq_class generalized_binomial(long n, long k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  for (long i = 0; i < k; ++i) num *= n - i;
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class paper_f_exact(long n_rho, long mu_abs) {
  const long mu = mu_abs;
  mpq_class f = 2 * generalized_binomial(n_rho + mu, mu);
  f -= 4 * mu * generalized_binomial(mu + n_rho + 2, n_rho - 1);
  mpq_class bracket = 2 * generalized_binomial(mu + n_rho, n_rho);
  bracket += 4 * generalized_binomial(mu + n_rho - 2, n_rho);
  bracket += generalized_binomial(mu + n_rho + 1, n_rho);
  bracket -= generalized_binomial(mu + n_rho + 2, n_rho - 1);
  f -= mu * (1 + mu) * bracket;
  return f;
}

double paper_f(long n_rho, long mu_abs) { return paper_f_exact(n_rho, mu_abs).get_d(); }

Corrections paper_corrections(const QuantumNumbers& qn, const PhysicalParams& p) {
  const double wt = omega_tilde(p);
  const double mu_abs = std::abs(qn.mu);
  Corrections c;
  c.dE_eta = -p.eta * mu_abs / (2 * p.mass) -
             p.eta * p.omega_c * (2 * qn.n_rho + mu_abs + 1) / (4 * p.mass * wt);
  c.dE_theta = -0.5 * p.theta * p.mass * wt * (wt - 0.5 * p.omega_c * paper_f(qn.n_rho, qn.mu >= 0 ? qn.mu : -qn.mu));
  return c;
}

Corrections derived_corrections(const QuantumNumbers& qn, const PhysicalParams& p) {
  const double wt = omega_tilde(p);
  const double n_sum = 2 * qn.n_rho + std::abs(qn.mu) + 1;
  Corrections c;
  c.dE_eta = p.eta * (-qn.mu / (2 * p.mass) + p.omega_c * n_sum / (4 * p.mass * wt));
  c.dE_theta = p.theta * p.mass * (0.25 * p.omega_c * wt * n_sum - 0.5 * wt * wt * qn.mu);
  return c;
}

ValidityRatios validity_ratios(const PhysicalParams& p) {
  ValidityRatios r;
  if (p.omega_c != 0.0) r.r_eta = p.eta / (p.hbar * p.mass * std::abs(p.omega_c));
  r.r_theta = p.theta * p.mass * omega_tilde(p) / p.hbar;
  return r;
}

}  // namespace ncosc
