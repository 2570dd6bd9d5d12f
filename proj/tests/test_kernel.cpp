#include <gtest/gtest.h>

#include <random>

#include "fbeta/parse.hpp"
#include "fbeta/series.hpp"

using namespace fbeta;

namespace {

AlphabetPtr v_alphabet() { return make_alphabet({"v1", "v2"}, {2, 6}); }
AlphabetPtr modular_alphabet() { return make_alphabet({"a1", "a3"}, {2, 6}); }

}  // namespace

TEST(Valuation, Examples) {
  EXPECT_EQ(padic_valuation(Rational(0), 5), kInfiniteValuation);
  EXPECT_EQ(padic_valuation(Rational(1, 4), 2), -2);
  Rational q(-4900, 59049);  // 3^10
  EXPECT_EQ(padic_valuation(q, 3), -10);
  EXPECT_EQ(padic_valuation(Rational(-48, 5), 2), 4);
  EXPECT_EQ(padic_valuation(Rational(-48, 5), 5), -1);
}

TEST(Valuation, FractionalPart) {
  EXPECT_EQ(p_fractional_part(Rational(5, 16), 2), Rational(5, 16));
  EXPECT_EQ(p_fractional_part(Rational(-1, 8), 2), Rational(7, 8));
  EXPECT_EQ(p_fractional_part(Rational(1, 3), 2), Rational(0));
  // 1/12 = 1/(4*3); 3^-1 = 3 mod 4 so the part is 3/4.
  EXPECT_EQ(p_fractional_part(Rational(1, 12), 2), Rational(3, 4));
  for (int n = -40; n <= 40; ++n) {
    Rational q = frac(n, 24);
    Rational f = p_fractional_part(q, 2);
    EXPECT_TRUE(f >= 0 && f < 1);
    EXPECT_TRUE(is_p_integral(q - f, 2));
  }
}

TEST(Cyclotomic, Arithmetic) {
  Cyclo z = Cyclo::zeta();
  EXPECT_EQ(z * z, Cyclo(-1, -1));
  EXPECT_EQ(z * z * z, Cyclo(1));
  Cyclo u(1, 2);  // 1 + 2 zeta, square is -3
  EXPECT_EQ(u * u, Cyclo(-3));
  EXPECT_EQ(u * u.inverse(), Cyclo(1));
  EXPECT_EQ(u.conj(), Cyclo(-1, -2));
  EXPECT_EQ(u.norm(), Rational(3));
  EXPECT_EQ(Cyclo(Rational(1, 2), 3).valuation(2), -1);
}

TEST(Residue, F4) {
  Residue w(2, 0, 1);
  EXPECT_EQ(w * w, Residue(2, 1, 1));
  EXPECT_EQ(w * w * w, Residue(2, 1, 0));
  EXPECT_EQ(w.inverse() * w, Residue(2, 1, 0));
  EXPECT_EQ(Residue::from_cyclo(Cyclo(1, 2), 2), Residue(2, 1, 0));
  EXPECT_EQ(Residue::from_rational(Rational(-1, 9), 2), Residue(2, 1, 0));
  EXPECT_THROW(Residue::from_rational(Rational(1, 2), 2), std::domain_error);
  EXPECT_EQ(Residue(1) + Residue(2, 1, 0), Residue(2, 0, 0));
  EXPECT_EQ(Residue(5, 3).inverse(), Residue(5, 2));
}

TEST(Polynomial, Basics) {
  auto A = v_alphabet();
  RPoly v1 = RPoly::generator(A, "v1");
  RPoly v2 = RPoly::generator(A, "v2");
  RPoly sq = v1 * v1;
  EXPECT_EQ(sq.size(), 1U);
  EXPECT_EQ(sq.degree(), 4);
  EXPECT_EQ(sq.str(), "v1^2");
  RPoly f = v2 + v1.pow(3);
  EXPECT_EQ(f.degree(), 6);
  EXPECT_EQ(f.str(), "v2 + v1^3");  // v2 dominates v1 in the monomial order
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(parse_polynomial("v2 + v1^3", A), f);
  EXPECT_EQ(parse_polynomial("-1/2*v1*v2 + 3", A).str(), "-1/2*v1*v2 + 3");
}

TEST(Polynomial, SubstitutionKeepsDegrees) {
  auto A = v_alphabet();
  auto M = modular_alphabet();
  RPoly f = parse_polynomial("v2 + v1^3", A);
  SubstitutionMap<Rational> img(2);
  img[0] = RPoly::generator(M, "a1");
  img[1] = RPoly::generator(M, "a3");
  RPoly g = substitute(f, img, M);
  EXPECT_EQ(g, parse_polynomial("a3 + a1^3", M));
  EXPECT_EQ(g.degree(), 6);
  img[1] = RPoly::generator(M, "a1");
  EXPECT_THROW(substitute(f, img, M), std::invalid_argument);
}

TEST(Polynomial, DiscriminantProduct) {
  auto M = modular_alphabet();
  RPoly a1 = RPoly::generator(M, "a1"), a3 = RPoly::generator(M, "a3");
  RPoly delta = (a1.pow(3) - a3 * Rational(27)) * a3.pow(3);
  EXPECT_EQ(delta, parse_polynomial("a1^3*a3^3 - 27*a3^4", M));
  EXPECT_EQ(delta.degree(), 24);
}

TEST(Polynomial, AlphabetMismatch) {
  RPoly x = RPoly::generator(v_alphabet(), "v1");
  RPoly y = RPoly::generator(modular_alphabet(), "a1");
  EXPECT_THROW(x + y, std::invalid_argument);
  EXPECT_THROW(x * y, std::invalid_argument);
}

TEST(Polynomial, ReduceModP) {
  auto M = modular_alphabet();
  CPoly f = CPoly::generator(M, "a1") * Cyclo(1, 2);
  FPoly r = reduce_mod_p(f, 2);
  EXPECT_EQ(r, FPoly::generator(M, "a1"));
  EXPECT_THROW(reduce_mod_p(RPoly(M, Rational(1, 2)), 2), std::domain_error);
}

TEST(Series, ReverseIdentity) {
  RSeries x = RSeries::variable(6);
  EXPECT_EQ(x.reverse(), x);
}

TEST(Series, ReverseCatalan) {
  // x + x^2 has inverse (sqrt(1+4x) - 1)/2 = sum (-1)^{n-1} Cat(n-1) x^n.
  const std::size_t n = 12;
  RSeries f(n);
  f[1] = 1;
  f[2] = 1;
  RSeries g = f.reverse();
  Integer cat = 1;  // Catalan(k)
  for (std::size_t k = 1; k < n; ++k) {
    Rational expect = (k % 2 == 1 ? 1 : -1) * Rational(cat);
    EXPECT_EQ(g[k], expect) << "k=" << k;
    cat = cat * 2 * (2 * static_cast<long>(k) - 1) / (static_cast<long>(k) + 1);
  }
  EXPECT_EQ(g[1], 1);
  EXPECT_EQ(g[2], -1);
  EXPECT_EQ(g[3], 2);
  EXPECT_EQ(g[4], -5);
}

TEST(Series, ReverseTwoTypicalLog) {
  auto L = make_alphabet({"l1", "l2"}, {2, 6});
  RPoly l1 = RPoly::generator(L, "l1"), l2 = RPoly::generator(L, "l2");
  PolySeries log(5);
  log[1] = RPoly(L, 1);
  log[2] = l1;
  log[4] = l2;
  PolySeries e = log.reverse();
  EXPECT_EQ(e[1], RPoly(L, 1));
  EXPECT_EQ(e[2], -l1);
  EXPECT_EQ(e[3], l1 * l1 * Rational(2));
  EXPECT_EQ(e[4], -(l1.pow(3) * Rational(5) + l2));
}

TEST(Series, ReverseErrors) {
  RSeries f(4);
  f[0] = 1;
  f[1] = 1;
  EXPECT_THROW(f.reverse(), std::domain_error);
  RSeries g(4);
  g[1] = 2;
  EXPECT_THROW(g.reverse(), std::domain_error);
}

TEST(Series, ReverseInvolutionRandom) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    RSeries f(8);
    f[1] = 1;
    for (std::size_t k = 2; k < 8; ++k) f[k] = frac(d(rng), 1 + std::abs(d(rng)));
    RSeries g = f.reverse();
    EXPECT_EQ(g.reverse(), f);
    EXPECT_EQ(f.compose(g), RSeries::variable(8));
    EXPECT_EQ(g.compose(f), RSeries::variable(8));
  }
}

TEST(Series, InverseAndPrecision) {
  RSeries f(5);
  f[0] = 1;
  f[1] = -1;
  RSeries g = f.inverse();
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(g[k], 1);
  RSeries h(3);
  EXPECT_EQ((f * h).precision(), 3U);
}
