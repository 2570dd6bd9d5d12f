#include "fbeta/cobar.hpp"

#include <stdexcept>

namespace fbeta {

bool TensorWordLess::operator()(const TensorWord& a, const TensorWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

CobarElement CobarElement::word(TensorWord w, const Rational& c) {
  CobarElement out(w.size());
  out.add(w, c);
  return out;
}

CobarElement CobarElement::tensor(const std::vector<RPoly>& factors) {
  if (factors.empty()) throw std::invalid_argument("cobar: empty tensor");
  CobarElement out(factors.size());
  std::vector<std::size_t> pos(factors.size(), 0);
  for (const auto& f : factors)
    if (f.is_zero()) return out;
  // Odometer over the terms of each factor.
  while (true) {
    TensorWord w;
    Rational c(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& t = factors[i].terms()[pos[i]];
      w.push_back(t.first);
      c *= t.second;
    }
    out.add(w, c);
    std::size_t k = 0;
    while (k < factors.size() && ++pos[k] == factors[k].size()) pos[k++] = 0;
    if (k == factors.size()) break;
  }
  return out;
}

void CobarElement::add(const TensorWord& w, const Rational& c) {
  if (w.size() != length_) throw std::invalid_argument("cobar: word length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CobarElement& CobarElement::operator+=(const CobarElement& o) {
  if (length_ == 0) length_ = o.length_;
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

CobarElement& CobarElement::operator-=(const CobarElement& o) {
  if (length_ == 0) length_ = o.length_;
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

CobarElement operator*(const Rational& c, const CobarElement& a) {
  CobarElement out(a.length_);
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

CobarElement coface(const CobarElement& x, std::size_t i) {
  if (i > x.length()) throw std::out_of_range("coface index");
  CobarElement out(x.length() + 1);
  for (const auto& [w, c] : x.terms()) {
    TensorWord n = w;
    n.insert(n.begin() + static_cast<long>(i), Monomial());
    out.add(n, c);
  }
  return out;
}

CobarElement codegeneracy(const CobarElement& x, std::size_t i) {
  if (i + 1 >= x.length()) throw std::out_of_range("codegeneracy index");
  CobarElement out(x.length() - 1);
  for (const auto& [w, c] : x.terms()) {
    TensorWord n = w;
    n[i] = n[i] * n[i + 1];
    n.erase(n.begin() + static_cast<long>(i) + 1);
    out.add(n, c);
  }
  return out;
}

CobarElement differential(const CobarElement& x) {
  CobarElement out(x.length() + 1);
  for (std::size_t i = 0; i <= x.length(); ++i) {
    if (i % 2 == 0) {
      out += coface(x, i);
    } else {
      out -= coface(x, i);
    }
  }
  return out;
}

CobarElement contracting_homotopy(const CobarElement& x) {
  if (x.length() < 2) throw std::invalid_argument("contracting homotopy needs at least two factors");
  CobarElement out(x.length() - 1);
  for (const auto& [w, c] : x.terms()) {
    if (!w[0].is_one()) continue;  // tau kills positive-degree monomials
    out.add(TensorWord(w.begin() + 1, w.end()), c);
  }
  return out;
}

bool is_sigma_word(const TensorWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].is_one()) return true;
  return false;
}

CobarElement project_mod_sigma(const CobarElement& x) {
  CobarElement out(x.length());
  for (const auto& [w, c] : x.terms())
    if (!is_sigma_word(w)) out.add(w, c);
  return out;
}

CobarElement quotient_differential(const CobarElement& x) { return project_mod_sigma(coface(x, 0)); }

}  // namespace fbeta
