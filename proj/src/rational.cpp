#include "fbeta/rational.hpp"

#include <stdexcept>

namespace fbeta {

long padic_valuation(const Integer& n, unsigned long p) {
  if (sgn(n) == 0) return kInfiniteValuation;
  if (p < 2) throw std::invalid_argument("padic_valuation: p must be prime");
  if (p == 2) return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
  Integer rest = n;
  long v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

long padic_valuation(const Rational& q, unsigned long p) {
  if (sgn(q) == 0) return kInfiniteValuation;
  return padic_valuation(Integer(q.get_num()), p) - padic_valuation(Integer(q.get_den()), p);
}

bool is_p_integral(const Rational& q, unsigned long p) {
  return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

Integer residue_mod_prime_power(const Rational& q, unsigned long p, unsigned r) {
  if (!is_p_integral(q, p)) {
    throw std::domain_error("residue of non-integral rational " + to_string(q) + " at p=" +
                            std::to_string(p));
  }
  Integer m = ipow(Integer(p), r);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0) {
    if (m == 1) return 0;
    throw std::domain_error("denominator not invertible");
  }
  Integer out = q.get_num() * inv;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
  return out;
}

unsigned long residue_mod_prime(const Rational& q, unsigned long p) {
  return residue_mod_prime_power(q, p, 1).get_ui();
}

Rational p_fractional_part(const Rational& q, unsigned long p) {
  if (sgn(q) == 0) return 0;
  Integer den = q.get_den();
  long e = padic_valuation(den, p);
  if (e == 0) return 0;
  Integer pe = ipow(Integer(p), static_cast<unsigned long>(e));
  Integer m = den / pe;
  // q = num / (p^e m); the fractional part is (num * m^-1 mod p^e) / p^e.
  Integer inv;
  mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), pe.get_mpz_t());
  Integer n = q.get_num() * inv;
  mpz_mod(n.get_mpz_t(), n.get_mpz_t(), pe.get_mpz_t());
  Rational f(n, pe);
  f.canonicalize();
  return f;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (sgn(base) == 0) throw std::domain_error("0 to a negative power");
    return rpow(Rational(1) / base, -e);
  }
  Rational out(ipow(base.get_num(), static_cast<unsigned long>(e)),
               ipow(base.get_den(), static_cast<unsigned long>(e)));
  out.canonicalize();
  return out;
}

unsigned long ulpow(unsigned long base, unsigned e) {
  unsigned long out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > std::numeric_limits<unsigned long>::max() / base)
      throw std::overflow_error("ulpow overflow");
    out *= base;
  }
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return q;
}

}  // namespace fbeta
