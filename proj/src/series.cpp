#include "fbeta/series.hpp"

namespace fbeta {

FSeries reduce_mod_p(const CSeries& s, unsigned p) {
  FSeries out(s.precision());
  for (std::size_t i = 0; i < s.precision(); ++i) {
    if (!s[i].is_integral(p))
      throw std::domain_error("reduce_mod_p: q^" + std::to_string(i) + " coefficient " + s[i].str() +
                              " has valuation " + std::to_string(s[i].valuation(p)));
    out[i] = Residue::from_cyclo(s[i], p);
  }
  return out;
}

FSeries reduce_mod_p(const RSeries& s, unsigned p) {
  FSeries out(s.precision());
  for (std::size_t i = 0; i < s.precision(); ++i) {
    if (!is_p_integral(s[i], p))
      throw std::domain_error("reduce_mod_p: q^" + std::to_string(i) + " coefficient " + to_string(s[i]) +
                              " has valuation " + std::to_string(padic_valuation(s[i], p)));
    out[i] = Residue::from_rational(s[i], p);
  }
  return out;
}

CSeries to_cyclo(const RSeries& s) {
  CSeries out(s.precision());
  for (std::size_t i = 0; i < s.precision(); ++i) out[i] = Cyclo(s[i]);
  return out;
}

long min_valuation(const CSeries& s, unsigned long p) {
  long v = kInfiniteValuation;
  for (std::size_t i = 0; i < s.precision(); ++i) v = std::min(v, s[i].valuation(p));
  return v;
}

bool is_integral(const CSeries& s, unsigned long p) {
  for (std::size_t i = 0; i < s.precision(); ++i)
    if (!s[i].is_integral(p)) return false;
  return true;
}

}  // namespace fbeta
