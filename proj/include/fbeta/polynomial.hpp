#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fbeta/cyclotomic.hpp"
#include "fbeta/monomial.hpp"
#include "fbeta/rational.hpp"
#include "fbeta/residue.hpp"

namespace fbeta {

template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

template <class C>
class Polynomial;

// Unordered term sink; finish() sorts and drops zeros.
template <class C>
class TermAccumulator {
 public:
  explicit TermAccumulator(AlphabetPtr alpha = nullptr) : alpha_(std::move(alpha)) {}

  void add(const Monomial& m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }

  void add(const Polynomial<C>& p) {
    adopt(p.alphabet());
    for (const auto& [m, c] : p.terms()) add(m, c);
  }

  void add_scaled(const Polynomial<C>& p, const C& scale, const Monomial& shift = Monomial()) {
    adopt(p.alphabet());
    if (coeff_is_zero(scale)) return;
    for (const auto& [m, c] : p.terms()) add(m * shift, c * scale);
  }

  void adopt(const AlphabetPtr& a) {
    require_same_alphabet(alpha_, a);
    if (!alpha_) alpha_ = a;
  }

  Polynomial<C> finish() &&;

 private:
  AlphabetPtr alpha_;
  std::unordered_map<Monomial, C, MonomialHash> terms_;
};

template <class C>
class Polynomial {
 public:
  using Term = std::pair<Monomial, C>;

  Polynomial() = default;
  Polynomial(int c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Monomial(), C(c));
  }
  explicit Polynomial(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  Polynomial(AlphabetPtr alpha, const C& c) : alpha_(std::move(alpha)) {
    if (!coeff_is_zero(c)) terms_.emplace_back(Monomial(), c);
  }

  static Polynomial generator(const AlphabetPtr& alpha, std::size_t i, unsigned power = 1) {
    return monomial(alpha, Monomial::generator(*alpha, i, power), C(1));
  }
  static Polynomial generator(const AlphabetPtr& alpha, std::string_view name, unsigned power = 1) {
    return generator(alpha, alpha->index(name), power);
  }
  static Polynomial monomial(const AlphabetPtr& alpha, const Monomial& m, const C& c) {
    Polynomial p(alpha);
    if (!coeff_is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  // Terms may repeat and be unsorted.
  static Polynomial from_terms(const AlphabetPtr& alpha, const std::vector<Term>& terms) {
    TermAccumulator<C> acc(alpha);
    for (const auto& [m, c] : terms) acc.add(m, c);
    return std::move(acc).finish();
  }
  // Terms must be sorted descending, distinct, nonzero.
  static Polynomial from_sorted_terms(AlphabetPtr alpha, std::vector<Term> terms) {
    Polynomial p(std::move(alpha));
    p.terms_ = std::move(terms);
    return p;
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  C constant_term() const { return coefficient(Monomial()); }
  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return compare(t.first, x) > 0; });
    if (it != terms_.end() && it->first == m) return it->second;
    return C();
  }
  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.deg != terms_.front().first.deg) return false;
    return true;
  }
  // Degree of a homogeneous polynomial (0 for the zero polynomial).
  int degree() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) throw std::domain_error("degree of inhomogeneous polynomial");
    return terms_.front().first.deg;
  }
  Polynomial homogeneous_part(int deg) const {
    Polynomial p(alpha_);
    for (const auto& t : terms_)
      if (t.first.deg == deg) p.terms_.push_back(t);
    return p;
  }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& t : terms_)
      if (out.empty() || out.back() != t.first.deg) out.push_back(t.first.deg);
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) { return merge(o, false); }
  Polynomial& operator-=(const Polynomial& o) { return merge(o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const C& c) {
    if (is_zero_c(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    prune();
    return *this;
  }
  Polynomial& operator/=(const C& c) {
    if (is_zero_c(c)) throw std::domain_error("polynomial division by zero");
    for (auto& t : terms_) t.second /= c;
    prune();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const C& c) { return a *= c; }
  friend Polynomial operator*(const C& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const C& c) { return a /= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_alphabet(a.alpha_, b.alpha_);
    TermAccumulator<C> acc(a.alpha_ ? a.alpha_ : b.alpha_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) acc.add(ma * mb, ca * cb);
    return std::move(acc).finish();
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!alphabets_equal(a.alpha_, b.alpha_)) return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const {
    Polynomial out(alpha_, C(1));
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) out = out * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return out;
  }

  Polynomial shifted(const Monomial& m) const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.first = t.first * m;
    return p;
  }

  template <class F>
  auto map_coefficients(F f) const -> Polynomial<decltype(f(std::declval<C>()))> {
    using D = decltype(f(std::declval<C>()));
    std::vector<typename Polynomial<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      D d = f(c);
      if (!coeff_is_zero(d)) out.emplace_back(m, std::move(d));
    }
    return Polynomial<D>::from_sorted_terms(alpha_, std::move(out));
  }

  template <class F>
  Polynomial filter(F keep) const {
    Polynomial p(alpha_);
    for (const auto& t : terms_)
      if (keep(t.first, t.second)) p.terms_.push_back(t);
    return p;
  }

  // Same generator names in another alphabet (which must contain every generator used).
  Polynomial relabel(const AlphabetPtr& target) const {
    if (!alpha_) return Polynomial(target, constant_term());
    std::vector<std::size_t> map(alpha_->size());
    std::vector<bool> used(alpha_->size(), false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < alpha_->size(); ++i)
        if (t.first.e[i]) used[i] = true;
    for (std::size_t i = 0; i < alpha_->size(); ++i) {
      if (!used[i]) continue;
      map[i] = target->index(alpha_->name(i));
      if (target->degree(map[i]) != alpha_->degree(i))
        throw std::invalid_argument("relabel: degree mismatch for " + alpha_->name(i));
    }
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (std::size_t i = 0; i < alpha_->size(); ++i)
        if (m.e[i]) n.set(*target, map[i], m.e[i]);
      out.emplace_back(n, c);
    }
    return from_terms(target, out);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      bool one = m.is_one();
      if (one) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << m.str(*alpha_);
      }
    }
    return os.str();
  }

 private:
  static bool is_zero_c(const C& c) { return coeff_is_zero(c); }

  void prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return coeff_is_zero(t.second); }),
                 terms_.end());
  }

  Polynomial& merge(const Polynomial& o, bool subtract) {
    require_same_alphabet(alpha_, o.alpha_);
    if (!alpha_) alpha_ = o.alpha_;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      int cmp = i == terms_.end() ? -1 : (j == o.terms_.end() ? 1 : compare(i->first, j->first));
      if (cmp > 0) {
        out.push_back(std::move(*i++));
      } else if (cmp < 0) {
        out.emplace_back(j->first, subtract ? C(-j->second) : j->second);
        ++j;
      } else {
        C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
        if (!coeff_is_zero(c)) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  AlphabetPtr alpha_;
  std::vector<Term> terms_;
};

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

template <class C>
std::string to_string(const Polynomial<C>& p) {
  return p.str();
}

template <class C>
std::ostream& operator<<(std::ostream& os, const Polynomial<C>& p) {
  return os << p.str();
}

template <class C>
Polynomial<C> TermAccumulator<C>::finish() && {
  std::vector<typename Polynomial<C>::Term> out;
  out.reserve(terms_.size());
  for (auto& [m, c] : terms_)
    if (!is_zero(c)) out.emplace_back(m, std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return compare(x.first, y.first) > 0; });
  return Polynomial<C>::from_sorted_terms(alpha_, std::move(out));
}

using RPoly = Polynomial<Rational>;
using CPoly = Polynomial<Cyclo>;
using FPoly = Polynomial<Residue>;

// Generator images for substitution; images[i] is used for generator i of the source.
template <class D>
using SubstitutionMap = std::vector<std::optional<Polynomial<D>>>;

// Ring homomorphism defined by generator images. Powers of images are cached for
// the duration of the call. With check_degrees, every used image must be
// homogeneous of its generator's degree.
template <class C, class D, class Lift>
Polynomial<D> substitute(const Polynomial<C>& f, const SubstitutionMap<D>& images, const AlphabetPtr& target,
                         Lift lift, bool check_degrees = true) {
  TermAccumulator<D> acc(target);
  if (f.is_zero()) return std::move(acc).finish();
  const AlphabetPtr& src = f.alphabet();
  std::map<std::pair<std::size_t, unsigned>, Polynomial<D>> powers;
  auto power = [&](std::size_t g, unsigned k) -> const Polynomial<D>& {
    auto key = std::make_pair(g, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    if (g >= images.size() || !images[g])
      throw std::invalid_argument("substitution: no image for generator " + src->name(g));
    const Polynomial<D>& img = *images[g];
    if (check_degrees && k == 1 && !img.is_zero()) {
      if (!img.is_homogeneous() || img.degree() != src->degree(g))
        throw std::invalid_argument("substitution: image of " + src->name(g) + " violates degree");
    }
    Polynomial<D> val = k == 1 ? img : img.pow(k);
    return powers.emplace(key, std::move(val)).first->second;
  };
  for (const auto& [m, c] : f.terms()) {
    Polynomial<D> term(target, lift(c));
    for (std::size_t g = 0; g < kMaxGenerators; ++g) {
      if (m.e[g] == 0) continue;
      term = term * power(g, m.e[g]);
      if (term.is_zero()) break;
    }
    for (const auto& [mm, cc] : term.terms()) acc.add(mm, cc);
  }
  return std::move(acc).finish();
}

template <class C>
Polynomial<C> substitute(const Polynomial<C>& f, const SubstitutionMap<C>& images, const AlphabetPtr& target,
                         bool check_degrees = true) {
  return substitute(f, images, target, [](const C& c) { return c; }, check_degrees);
}

// Evaluate at scalar values for every generator.
template <class C, class D, class Lift>
D evaluate(const Polynomial<C>& f, const std::vector<D>& values, Lift lift) {
  D sum = D();
  for (const auto& [m, c] : f.terms()) {
    D term = lift(c);
    for (std::size_t g = 0; g < kMaxGenerators; ++g)
      for (unsigned k = 0; k < m.e[g]; ++k) term *= values.at(g);
    sum += term;
  }
  return sum;
}

// Exact quotient by a monomial; throws if some term is not divisible.
template <class C>
Polynomial<C> divide_by_monomial(const Polynomial<C>& f, const Monomial& m) {
  std::vector<typename Polynomial<C>::Term> out;
  for (const auto& [mm, c] : f.terms()) {
    if (!m.divides(mm))
      throw std::domain_error("exact division failed at term " + mm.str(*f.alphabet()));
    out.emplace_back(mm / m, c);
  }
  return Polynomial<C>::from_sorted_terms(f.alphabet(), std::move(out));
}

long valuation_of(const Rational& c, unsigned long p);
long valuation_of(const Cyclo& c, unsigned long p);

RPoly reduce_coefficients_mod(const RPoly& f, unsigned long p, unsigned r);
FPoly reduce_mod_p(const RPoly& f, unsigned p);
FPoly reduce_mod_p(const CPoly& f, unsigned p);
CPoly to_cyclo(const RPoly& f);

// p-adic valuation of the polynomial: minimum over coefficients.
long padic_valuation(const RPoly& f, unsigned long p);

}  // namespace fbeta
