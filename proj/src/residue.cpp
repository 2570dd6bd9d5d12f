#include "fbeta/residue.hpp"

#include <stdexcept>

namespace fbeta {

namespace {

long mod(long x, unsigned p) {
  long r = x % static_cast<long>(p);
  return r < 0 ? r + static_cast<long>(p) : r;
}

long inv_mod(long x, unsigned p) {
  long t = 0, nt = 1, r = static_cast<long>(p), nr = mod(x, p);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return mod(t, p);
}

}  // namespace

Residue::Residue(unsigned p, long a, long b) : p_(p), a_(a), b_(b) {
  if (p == 1) throw std::invalid_argument("Residue: modulus 1");
  normalize();
}

Residue Residue::from_rational(const Rational& q, unsigned p) {
  return Residue(p, static_cast<long>(residue_mod_prime(q, p)), 0);
}

Residue Residue::from_cyclo(const Cyclo& c, unsigned p) {
  if (!c.is_integral(p))
    throw std::domain_error("reduction of non-integral value " + c.str() + " mod " + std::to_string(p));
  return Residue(p, static_cast<long>(residue_mod_prime(c.a(), p)),
                 static_cast<long>(residue_mod_prime(c.b(), p)));
}

void Residue::normalize() {
  if (p_ == 0) return;
  a_ = mod(a_, p_);
  b_ = mod(b_, p_);
}

void Residue::bind(unsigned p) {
  if (p_ == p) return;
  if (p_ != 0) throw std::invalid_argument("Residue: mixing primes");
  p_ = p;
  normalize();
}

void Residue::unify(Residue& x, Residue& y) {
  if (x.p_ == y.p_) return;
  if (x.p_ == 0) x.bind(y.p_);
  else if (y.p_ == 0) y.bind(x.p_);
  else throw std::invalid_argument("Residue: mixing primes");
}

Residue& Residue::operator+=(const Residue& o) {
  Residue y = o;
  unify(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  Residue y = o;
  unify(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  Residue y = o;
  unify(*this, y);
  long bd = b_ * y.b_;
  long a = a_ * y.a_ - bd;
  long b = a_ * y.b_ + b_ * y.a_ - bd;
  a_ = a;
  b_ = b;
  normalize();
  return *this;
}

Residue Residue::inverse() const {
  if (p_ == 0) {
    if (b_ == 0 && (a_ == 1 || a_ == -1)) return *this;
    throw std::domain_error("inverse of an unbound residue constant");
  }
  // (a + b zb)^-1 = conj / norm with conj = (a - b) - b zb, norm = a^2 - ab + b^2.
  long n = mod(a_ * a_ - a_ * b_ + b_ * b_, p_);
  if (n == 0) throw std::domain_error("inverse of a zero divisor in F_p[zeta]");
  long ni = inv_mod(n, p_);
  return Residue(p_, (a_ - b_) * ni, -b_ * ni);
}

Residue Residue::frobenius() const {
  if (p_ == 0) return *this;
  Residue out(p_, 1, 0);
  Residue base = *this;
  unsigned e = p_;
  while (e > 0) {
    if (e & 1U) out *= base;
    base *= base;
    e >>= 1U;
  }
  return out;
}

bool operator==(const Residue& x, const Residue& y) {
  Residue u = x, v = y;
  Residue::unify(u, v);
  return u.a_ == v.a_ && u.b_ == v.b_;
}

std::string Residue::str() const {
  if (b_ == 0) return std::to_string(a_);
  std::string zb = b_ == 1 ? "w" : std::to_string(b_) + "*w";
  if (a_ == 0) return zb;
  return "(" + std::to_string(a_) + "+" + zb + ")";
}

}  // namespace fbeta
