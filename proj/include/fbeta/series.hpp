#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbeta/polynomial.hpp"

namespace fbeta {

// Inverse of a scalar-like unit, used for series inversion.
inline Rational invert_unit(const Rational& c) {
  if (sgn(c) == 0) throw std::domain_error("series: constant term not invertible");
  return 1 / c;
}
inline Cyclo invert_unit(const Cyclo& c) { return c.inverse(); }
inline Residue invert_unit(const Residue& c) { return c.inverse(); }
template <class C>
Polynomial<C> invert_unit(const Polynomial<C>& c) {
  if (!c.is_constant() || c.is_zero()) throw std::domain_error("series: constant term is not a unit");
  return Polynomial<C>(c.alphabet(), invert_unit(c.constant_term()));
}

// Coefficients of x^0 .. x^{precision-1}; everything beyond is unknown.
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t precision) : c_(precision) {}
  explicit TruncatedSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {}

  static TruncatedSeries variable(std::size_t precision, const C& one = C(1)) {
    TruncatedSeries s(precision);
    if (precision > 1) s.c_[1] = one;
    return s;
  }
  static TruncatedSeries constant(std::size_t precision, const C& c) {
    TruncatedSeries s(precision);
    if (precision > 0) s.c_[0] = c;
    return s;
  }

  std::size_t precision() const { return c_.size(); }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  C& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<C>& coefficients() const { return c_; }

  TruncatedSeries truncated(std::size_t n) const {
    TruncatedSeries s = *this;
    if (n < s.c_.size()) s.c_.resize(n);
    return s;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const C& x) { return fbeta_is_zero(x); });
  }
  // Index of the first nonzero coefficient, or precision() if none.
  std::size_t order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!fbeta_is_zero(c_[i])) return i;
    return c_.size();
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t i = 0; i < n; ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    std::size_t n = std::min(c_.size(), o.c_.size());
    c_.resize(n);
    for (std::size_t i = 0; i < n; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const C& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const C& s) { return a *= s; }
  friend TruncatedSeries operator*(const C& s, TruncatedSeries a) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    TruncatedSeries out(n);
    std::size_t oa = a.order(), ob = b.order();
    for (std::size_t i = oa; i < n; ++i) {
      if (fbeta_is_zero(a.c_[i])) continue;
      for (std::size_t j = ob; i + j < n; ++j) {
        if (fbeta_is_zero(b.c_[j])) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  TruncatedSeries pow(unsigned k) const {
    TruncatedSeries out = constant(precision(), C(1));
    TruncatedSeries base = *this;
    while (k > 0) {
      if (k & 1U) out *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return out;
  }

  // Multiplicative inverse; the constant term must be a unit.
  TruncatedSeries inverse() const {
    std::size_t n = precision();
    if (n == 0) return *this;
    TruncatedSeries out(n);
    C inv0 = invert_unit(c_[0]);
    out.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      C s = C();
      for (std::size_t i = 1; i <= k; ++i) {
        if (fbeta_is_zero(c_[i])) continue;
        s += c_[i] * out.c_[k - i];
      }
      out.c_[k] = -(s * inv0);
    }
    return out;
  }

  TruncatedSeries derivative() const {
    TruncatedSeries out(c_.empty() ? 0 : c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = c_[i] * C(static_cast<int>(i));
    return out;
  }

  // Divide by x^k; requires the first k coefficients to vanish. Loses k digits of precision.
  TruncatedSeries shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
      if (!fbeta_is_zero(c_[i])) throw std::domain_error("series: not divisible by x^k");
    if (k >= c_.size()) return TruncatedSeries(0);
    return TruncatedSeries(std::vector<C>(c_.begin() + static_cast<long>(k), c_.end()));
  }
  // Multiply by x^k, keeping the same precision.
  TruncatedSeries shift_up(std::size_t k) const {
    TruncatedSeries out(c_.size());
    for (std::size_t i = 0; i + k < c_.size(); ++i) out.c_[i + k] = c_[i];
    return out;
  }

  // f(g) for g with zero constant term.
  TruncatedSeries compose(const TruncatedSeries& g) const {
    if (g.precision() > 0 && !fbeta_is_zero(g.c_[0]))
      throw std::domain_error("series composition: inner series has nonzero constant term");
    std::size_t n = std::min(precision(), g.precision());
    TruncatedSeries out(n);
    for (std::size_t i = n; i-- > 0;) {
      out = out * g.truncated(n);
      out.c_[0] += c_[i];
    }
    return out;
  }

  // Compositional inverse of x + (higher order terms).
  TruncatedSeries reverse() const {
    std::size_t n = precision();
    if (n < 2) throw std::domain_error("series reversion needs precision >= 2");
    if (!fbeta_is_zero(c_[0])) throw std::domain_error("series reversion: nonzero constant term");
    if (!fbeta_is_one(c_[1])) throw std::domain_error("series reversion: leading coefficient is not 1");
    TruncatedSeries g = variable(n, c_[1]);
    // Fix coefficient k of g so that f(g) = x + O(x^{k+1}).
    for (std::size_t k = 2; k < n; ++k) {
      TruncatedSeries fg = truncated(k + 1).compose(g.truncated(k + 1));
      g.c_[k] -= fg.c_[k];
    }
    return g;
  }

  std::string str(const std::string& var = "x") const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (fbeta_is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      std::string cs = to_string(c_[i]);
      if (i == 0) {
        out += cs;
      } else {
        out += "(" + cs + ")*" + var + (i > 1 ? "^" + std::to_string(i) : "");
      }
    }
    return (out.empty() ? std::string("0") : out) + " + O(" + var + "^" + std::to_string(c_.size()) + ")";
  }

 private:
  static bool fbeta_is_zero(const C& x) { return coeff_is_zero(x); }
  static bool fbeta_is_one(const C& x) { return x == C(1); }

  std::vector<C> c_;
};

using RSeries = TruncatedSeries<Rational>;
using CSeries = TruncatedSeries<Cyclo>;
using FSeries = TruncatedSeries<Residue>;
using PolySeries = TruncatedSeries<RPoly>;

FSeries reduce_mod_p(const CSeries& s, unsigned p);
FSeries reduce_mod_p(const RSeries& s, unsigned p);
CSeries to_cyclo(const RSeries& s);
// Valuation of the worst coefficient; kInfiniteValuation for the zero series.
long min_valuation(const CSeries& s, unsigned long p);
bool is_integral(const CSeries& s, unsigned long p);

}  // namespace fbeta
