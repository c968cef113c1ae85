#include "ncosc/params.hpp"

#include <cmath>

namespace ncosc {

double omega_tilde(const PhysicalParams& p) {
  return std::sqrt(p.omega * p.omega + 0.25 * p.omega_c * p.omega_c);
}

double cyclotron_frequency(double q, double B, double mass, double c) {
  return q * B / (mass * c);
}

double sym_value(const PhysicalParams& p, Sym s) {
  switch (s) {
    case Sym::hbar: return p.hbar;
    case Sym::mass: return p.mass;
    case Sym::omega: return p.omega;
    case Sym::omega_c: return p.omega_c;
    case Sym::alpha: return p.alpha;
    case Sym::theta: return p.theta;
    case Sym::eta: return p.eta;
  }
  return 0.0;
}

}  // namespace ncosc
