#include "ncosc/gaussian_rational.hpp"

#include <stdexcept>

namespace ncosc {

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("GaussianRational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::imaginary(long num, long den) {
  if (den == 0) throw std::invalid_argument("GaussianRational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return {mpq_class(0), q};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
  if (n == 0) throw std::invalid_argument("GaussianRational: division by zero");
  GaussianRational num = a * b.conj();
  return {num.re_ / n, num.im_ / n};
}

std::string GaussianRational::to_string() const {
  auto rat = [](const mpq_class& q) { return q.get_str(); };
  if (is_zero()) return "0";
  if (im_ == 0) return rat(re_);
  std::string imag_part = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : rat(im_) + "i");
  if (re_ == 0) return imag_part;
  if (im_ > 0) return rat(re_) + "+" + imag_part;
  return rat(re_) + imag_part;  // sign carried by the imaginary part
}

}  // namespace ncosc
