#pragma once

#include <map>
#include <vector>

#include "fbeta/polynomial.hpp"

namespace fbeta {

// D^n = A_Q^{(x)(n+1)} for A_Q a rational polynomial ring, stored on the basis
// of tensor words of monomials. Words compare lexicographically by factor.
using TensorWord = std::vector<Monomial>;

struct TensorWordLess {
  bool operator()(const TensorWord& a, const TensorWord& b) const;
};

class CobarElement {
 public:
  CobarElement() = default;
  explicit CobarElement(std::size_t length) : length_(length) {}

  static CobarElement word(TensorWord w, const Rational& c = Rational(1));
  // a_0 (x) ... (x) a_n from polynomials.
  static CobarElement tensor(const std::vector<RPoly>& factors);

  std::size_t length() const { return length_; }  // n + 1 factors
  int level() const { return static_cast<int>(length_) - 1;  }
  const std::map<TensorWord, Rational, TensorWordLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TensorWord& w, const Rational& c);
  CobarElement& operator+=(const CobarElement& o);
  CobarElement& operator-=(const CobarElement& o);
  friend CobarElement operator+(CobarElement a, const CobarElement& b) { return a += b; }
  friend CobarElement operator-(CobarElement a, const CobarElement& b) { return a -= b; }
  friend CobarElement operator*(const Rational& c, const CobarElement& a);
  friend bool operator==(const CobarElement& a, const CobarElement& b) {
    return a.length_ == b.length_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t length_ = 0;
  std::map<TensorWord, Rational, TensorWordLess> terms_;
};

// Insert 1 at 0-based position i, i = 0..n+1.
CobarElement coface(const CobarElement& x, std::size_t i);
// Merge factors i and i+1.
CobarElement codegeneracy(const CobarElement& x, std::size_t i);
// Sum of (-1)^i coface^i.
CobarElement differential(const CobarElement& x);
// a_0 (x) ... (x) a_n -> tau(a_0) a_1 (x) ... (x) a_n, tau the augmentation.
CobarElement contracting_homotopy(const CobarElement& x);

// Words with a constant factor in positions 1..n span Sigma^n.
bool is_sigma_word(const TensorWord& w);
CobarElement project_mod_sigma(const CobarElement& x);
// Differential of D/Sigma: [a_0 (x) ... ] -> [1 (x) a_0 (x) ...].
CobarElement quotient_differential(const CobarElement& x);

}  // namespace fbeta
