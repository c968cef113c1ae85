#pragma once

#include "ncosc/operator_poly.hpp"

namespace ncosc {

// Numeric physical parameters; the single source of truth for the numeric
// engine. theta has dimension length^2, eta mass^2 length^2 / time^2.
struct PhysicalParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double omega_c = 0.7;  // signed cyclotron frequency
  double alpha = 1.0;    // dimensionless scale in (0, 1]
  double theta = 0.0;
  double eta = 0.0;
};

// sqrt(omega^2 + omega_c^2/4), the effective in-plane frequency.
double omega_tilde(const PhysicalParams& p);

// q B / (m c)
double cyclotron_frequency(double q, double B, double mass, double c);

double sym_value(const PhysicalParams& p, Sym s);

// State labels (n_rho, mu, n_z) of the cylindrical problem. mu is signed.
struct QuantumNumbers {
  int n_rho = 0;
  int mu = 0;
  int n_z = 0;
};

}  // namespace ncosc
