#include "fbeta/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace fbeta {

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -1 - z
  Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - bd;
  Rational b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Cyclo Cyclo::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(zeta)");
  Cyclo c = conj();
  return {c.a_ / n, c.b_ / n};
}

long Cyclo::valuation(unsigned long p) const {
  if (sgn(b_) == 0) return padic_valuation(a_, p);
  if (p % 3 != 2)
    throw std::domain_error("valuation of a non-rational cyclotomic value at a split or ramified prime");
  return std::min(padic_valuation(a_, p), padic_valuation(b_, p));
}

bool Cyclo::is_integral(unsigned long p) const {
  return is_p_integral(a_, p) && is_p_integral(b_, p);
}

std::string Cyclo::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string zb = b_ == 1 ? "z" : (b_ == -1 ? "-z" : b_.get_str() + "*z");
  if (sgn(a_) == 0) return zb;
  std::string out = "(" + a_.get_str();
  out += sgn(b_) > 0 ? "+" + zb : zb;
  return out + ")";
}

}  // namespace fbeta
