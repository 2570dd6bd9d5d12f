#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

namespace fbeta {

using Integer = mpz_class;
using Rational = mpq_class;

// Returned by padic_valuation for zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

long padic_valuation(const Integer& n, unsigned long p);
long padic_valuation(const Rational& q, unsigned long p);

bool is_p_integral(const Rational& q, unsigned long p);

// Image of a p-integral rational in Z/p^r, as an integer in [0, p^r).
Integer residue_mod_prime_power(const Rational& q, unsigned long p, unsigned r);
unsigned long residue_mod_prime(const Rational& q, unsigned long p);

// The unique f in Z[1/p] with 0 <= f < 1 and q - f in Z_(p).
Rational p_fractional_part(const Rational& q, unsigned long p);

Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);
unsigned long ulpow(unsigned long base, unsigned e);

bool is_prime(unsigned long n);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// n/d in lowest terms (mpq_class(n, d) alone does not canonicalize).
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace fbeta
