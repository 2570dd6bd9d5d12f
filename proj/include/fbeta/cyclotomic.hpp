#pragma once

#include <string>

#include "fbeta/rational.hpp"

namespace fbeta {

// a + b*zeta with zeta^2 + zeta + 1 = 0.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Cyclo(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Cyclo zeta() { return {0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Cyclo conj() const { return {a_ - b_, -b_}; }
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  Cyclo inverse() const;

  // Valuation at a prime inert in Q(zeta) (p = 2 mod 3), or of a rational value.
  long valuation(unsigned long p) const;
  bool is_integral(unsigned long p) const;

  Cyclo& operator+=(const Cyclo& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Cyclo& operator-=(const Cyclo& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
  friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
  friend Cyclo operator-(const Cyclo& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Cyclo& x, const Cyclo& y) { return !(x == y); }

  std::string str() const;

 private:
  Rational a_, b_;
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }
inline std::string to_string(const Cyclo& c) { return c.str(); }

}  // namespace fbeta
