#include "fbeta/polynomial.hpp"

#include <algorithm>

namespace fbeta {

RPoly reduce_coefficients_mod(const RPoly& f, unsigned long p, unsigned r) {
  return f.map_coefficients([&](const Rational& c) { return Rational(residue_mod_prime_power(c, p, r)); });
}

namespace {

template <class C, class R>
FPoly reduce_checked(const Polynomial<C>& f, unsigned p, R reduce) {
  std::vector<FPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    Residue r;
    try {
      r = reduce(c);
    } catch (const std::domain_error&) {
      std::string where = f.alphabet() ? m.str(*f.alphabet()) : "1";
      throw std::domain_error("reduce_mod_p: coefficient " + to_string(c) + " of " + where +
                              " has valuation " + std::to_string(valuation_of(c, p)) + " at p=" +
                              std::to_string(p));
    }
    if (!r.is_zero()) out.emplace_back(m, r);
  }
  return FPoly::from_sorted_terms(f.alphabet(), std::move(out));
}

}  // namespace

long valuation_of(const Rational& c, unsigned long p) { return padic_valuation(c, p); }
long valuation_of(const Cyclo& c, unsigned long p) { return c.valuation(p); }

FPoly reduce_mod_p(const RPoly& f, unsigned p) {
  return reduce_checked(f, p, [p](const Rational& c) { return Residue::from_rational(c, p); });
}

FPoly reduce_mod_p(const CPoly& f, unsigned p) {
  return reduce_checked(f, p, [p](const Cyclo& c) { return Residue::from_cyclo(c, p); });
}

CPoly to_cyclo(const RPoly& f) {
  return f.map_coefficients([](const Rational& c) { return Cyclo(c); });
}

long padic_valuation(const RPoly& f, unsigned long p) {
  long v = kInfiniteValuation;
  for (const auto& t : f.terms()) v = std::min(v, padic_valuation(t.second, p));
  return v;
}

}  // namespace fbeta
