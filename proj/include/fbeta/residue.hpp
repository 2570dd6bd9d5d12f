#pragma once

#include <cstdint>
#include <string>

#include "fbeta/cyclotomic.hpp"

namespace fbeta {

// a + b*zb in F_p[zb]/(zb^2 + zb + 1). At p = 2 this is F_4; for level-1 work
// only the a component is used (F_p). A value with p == 0 is an unreduced small
// integer constant that adopts the prime of the first bound operand it meets.
class Residue {
 public:
  Residue() = default;
  Residue(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Residue(unsigned p, long a, long b = 0);

  static Residue from_rational(const Rational& q, unsigned p);
  static Residue from_cyclo(const Cyclo& c, unsigned p);

  unsigned prime() const { return p_; }
  long a() const { return a_; }
  long b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool in_prime_field() const { return b_ == 0; }

  Residue inverse() const;
  Residue frobenius() const;  // x -> x^p

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }

  friend Residue operator+(Residue x, const Residue& y) { return x += y; }
  friend Residue operator-(Residue x, const Residue& y) { return x -= y; }
  friend Residue operator*(Residue x, const Residue& y) { return x *= y; }
  friend Residue operator/(Residue x, const Residue& y) { return x /= y; }
  friend Residue operator-(const Residue& x) { return Residue() - x; }
  friend bool operator==(const Residue& x, const Residue& y);
  friend bool operator!=(const Residue& x, const Residue& y) { return !(x == y); }

  std::string str() const;

 private:
  void bind(unsigned p);
  void normalize();
  static void unify(Residue& x, Residue& y);

  unsigned p_ = 0;
  long a_ = 0, b_ = 0;
};

inline bool is_zero(const Residue& r) { return r.is_zero(); }
inline std::string to_string(const Residue& r) { return r.str(); }

}  // namespace fbeta
