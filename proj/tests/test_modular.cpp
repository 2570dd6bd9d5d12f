#include <gtest/gtest.h>

#include "fbeta/modular.hpp"
#include "fbeta/parse.hpp"

using namespace fbeta;

namespace {

constexpr std::size_t kN = 120;

FSeries reduce2(const CPoly& f, std::size_t n = kN) {
  return reduce_mod_p(ModularForms::get(3).expansion(f, n), 2);
}

}  // namespace

TEST(Sigma, TableMatchesDirectSum) {
  for (unsigned k : {0U, 2U, 3U}) {
    auto t = sigma_chi_table(k, 60);
    for (long n = 1; n < 60; ++n) EXPECT_EQ(t[n], sigma_chi(k, n)) << k << " " << n;
  }
  EXPECT_EQ(sigma_chi(0, 1), 1);
  EXPECT_EQ(sigma_chi(0, 2), 0);   // 1 - 1
  EXPECT_EQ(sigma_chi(2, 2), -3);  // 1 - 4
  EXPECT_EQ(sigma_chi(2, 3), 1);
}

TEST(Sigma, CongruenceBehindIgusaRelation) {
  // sigma_0(n/2) + sigma_0(n) = sigma_2(n) mod 2, with sigma_0(n/2) = 0 for odd n.
  EXPECT_EQ(sigma_congruence_counterexample(5000), 0);
}

TEST(Eisenstein, DiscriminantLevelOne) {
  const auto& M = ModularForms::get(1);
  RPoly delta = M.model().discriminant();
  EXPECT_EQ(delta, parse_polynomial("g2^3 - 27*g3^2", M.alphabet()));
  CSeries d = M.expansion(delta, 40);
  EXPECT_EQ(d, to_cyclo(delta_product(40)));
}

TEST(Eisenstein, DiscriminantLevelThree) {
  const auto& M = ModularForms::get(3);
  RPoly delta = M.model().discriminant();
  EXPECT_EQ(delta, parse_polynomial("a1^3*a3^3 - 27*a3^4", M.alphabet()));
  CSeries d = M.expansion(delta, 40);
  EXPECT_EQ(d, to_cyclo(delta_product(40)));
}

TEST(LevelThree, CuspValuesAndParity) {
  const auto& M = ModularForms::get(3);
  EXPECT_EQ(M.cusp_value(M.gen("a1")), Cyclo(1, 2));
  EXPECT_EQ(M.cusp_value(M.gen("a3")), Cyclo(frac(-1, 9), frac(-2, 9)));
  FSeries a1 = reduce2(M.gen("a1"), 300);
  EXPECT_EQ(a1, FSeries::constant(300, Residue(2, 1)));
}

TEST(FormalGroup, GeneralWeierstrassLowTerms) {
  auto A = make_alphabet({"a1", "a2", "a3", "a4", "a6"}, {2, 4, 6, 8, 12});
  WeierstrassModel E{A, RPoly::generator(A, "a1"), RPoly::generator(A, "a2"), RPoly::generator(A, "a3"),
                     RPoly::generator(A, "a4"), RPoly::generator(A, "a6")};
  auto c = invariant_differential(E, 6);
  EXPECT_EQ(c[1], RPoly(A, 1));
  EXPECT_EQ(c[2], parse_polynomial("a1", A));
  EXPECT_EQ(c[3], parse_polynomial("a1^2 + a2", A));
  EXPECT_EQ(c[4], parse_polynomial("a1^3 + 2*a1*a2 + 2*a3", A));
  EXPECT_EQ(c[5], parse_polynomial("a1^4 + 3*a1^2*a2 + 6*a1*a3 + a2^2 + 2*a4", A));
}

TEST(FormalGroup, LevelThreeOrientation) {
  const auto& o = Orientation::get(2, 3);
  const auto& A = o.forms().alphabet();
  EXPECT_EQ(o.log_coefficient(1), RPoly(A, 1));
  EXPECT_EQ(o.log_coefficient(2), parse_polynomial("a1", A));
  EXPECT_EQ(o.image(1), parse_polynomial("a1", A));
  EXPECT_EQ(o.image(2), parse_polynomial("a3", A));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_GE(padic_valuation(o.image(n), 2), 0) << n;
    EXPECT_EQ(o.image(n).degree(), o.bp().generator_degree(n));
  }
}

TEST(FormalGroup, LevelOneAtFive) {
  const auto& o = Orientation::get(5, 1);
  const auto& A = o.forms().alphabet();
  EXPECT_EQ(o.log_coefficient(5), parse_polynomial("-8*g2", A));
  EXPECT_EQ(o.image(1), parse_polynomial("-8*g2", A));
  EXPECT_EQ(o.cusp_image(1), Cyclo(frac(-2, 3)));
  EXPECT_EQ(o.cusp_image(2), Cyclo(Rational(-4900, 59049)));
  RPoly a25 = o.log_coefficient(25);
  RPoly expect_v2 = (a25 - o.log_coefficient(5).pow(6)) / Rational(5);
  EXPECT_EQ(o.image(2), expect_v2);
  EXPECT_EQ(o.unnormalized_log_coefficient(11), parse_polynomial("-2560*g2*g3", A));
}

TEST(FormalGroup, EisensteinOrientation) {
  const auto& o = Orientation::get(5, 1, OrientationKind::Eisenstein);
  const auto& A = o.forms().alphabet();
  EXPECT_EQ(o.image(1), parse_polynomial("12*g2", A));
  EXPECT_EQ(o.cusp_image(1), Cyclo(1));
  EXPECT_EQ(o.image(2), Orientation::get(5, 1).image(2));
  EXPECT_THROW(Orientation::get(2, 1), std::invalid_argument);
  EXPECT_THROW(Orientation::get(3, 3), std::invalid_argument);
}

TEST(Rho, UnitAndFirstGenerator) {
  const auto& o = Orientation::get(2, 3);
  const auto& bp = o.bp();
  const auto& M = o.forms();
  EXPECT_EQ(o.rho(RPoly(bp.alphabet(), 1)), CPoly(M.alphabet(), Cyclo(-1)));
  CPoly T = o.rho(bp.gen(bp.t(1)));
  CPoly expect = (CPoly(M.alphabet(), Cyclo(1, 2)) - M.gen("a1")) * Cyclo(frac(1, 2));
  EXPECT_EQ(T, expect);
  EXPECT_EQ(reduce2(T), IgusaBasis::get().t_bar(kN));
}

TEST(Rho, IgusaRelation) {
  const auto& I = IgusaBasis::get();
  FSeries t = I.t_bar(kN), a = I.a3_bar(kN);
  EXPECT_EQ(t * t + t, FSeries::constant(kN, Residue(2, 1)) + a);
  auto e = I.express(t * t, 6);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(*e, parse_polynomial("T + a3 + 1", I.alphabet()).map_coefficients(
                    [](const Rational& c) { return Residue::from_rational(c, 2); }));
}

TEST(Rho, HigherGeneratorsAreIntegral) {
  const auto& o = Orientation::get(2, 3);
  const auto& bp = o.bp();
  for (int n = 1; n <= 3; ++n) {
    CPoly Tn = o.rho(bp.gen(bp.t(n)));
    EXPECT_TRUE(is_divided_congruence(Tn, o.forms(), 2, 200)) << n;
  }
}

TEST(Rho, DiamondOperators) {
  const auto& o = Orientation::get(2, 3);
  const auto& bp = o.bp();
  FSeries one = FSeries::constant(kN, Residue(2, 1));
  CPoly T1 = o.rho(bp.gen(bp.t(1)));
  CPoly T2 = o.rho(bp.gen(bp.t(2)));
  EXPECT_EQ(reduce2(diamond(T1, 3)), reduce2(T1) + one);
  EXPECT_EQ(reduce2(diamond(T2, 5)), reduce2(T2) + one);
  EXPECT_EQ(reduce2(diamond(T2, 9)), reduce2(T2));
  EXPECT_EQ(diamond(diamond(T2, 5), 7), diamond(T2, 35));
}

TEST(Katz, RecursionAgainstRho) {
  // a_{p^n}/p^n = sum_i q^0(a_{p^i})/p^i (-T_{n-i})^{p^i}, T_0 = rho(1) = -1.
  const auto& o = Orientation::get(2, 3);
  const auto& bp = o.bp();
  const auto& M = o.forms();
  std::vector<CPoly> U{CPoly(M.alphabet(), Cyclo(1))};
  for (int n = 1; n <= 3; ++n) U.push_back(-o.rho(bp.gen(bp.t(n))));
  for (int n = 1; n <= 3; ++n) {
    CPoly rhs(M.alphabet());
    for (int i = 0; i <= n; ++i) {
      unsigned long pi = 1UL << i;
      Cyclo c = M.cusp_value(o.log_coefficient(pi)) / Cyclo(Rational(static_cast<long>(pi)));
      rhs += U[n - i].pow(pi) * c;
    }
    CPoly lhs = to_cyclo(o.log_coefficient(1UL << n)) * Cyclo(frac(1, 1L << n));
    EXPECT_EQ(lhs, rhs) << n;
  }
  CPoly d1 = katz_d(1, o);
  EXPECT_EQ(d1, (M.gen("a1") - CPoly(M.alphabet(), Cyclo(1))) * Cyclo(frac(1, 2)));
  for (int n = 1; n <= 2; ++n) EXPECT_TRUE(is_divided_congruence(katz_d(n, o), M, 2, 100)) << n;
}

TEST(Katz, SumOfPowersIdentity) {
  const auto& o = Orientation::get(2, 3);
  const auto& M = o.forms();
  std::vector<CPoly> d;
  for (int n = 0; n <= 3; ++n) d.push_back(katz_d(n, o));
  for (int n = 0; n <= 3; ++n) {
    CPoly sum(M.alphabet());
    for (int i = 0; i <= n; ++i) sum += d[n - i].pow(1U << i) * Cyclo(frac(1, 1L << i));
    EXPECT_EQ(sum, to_cyclo(o.log_coefficient(1UL << n)) * Cyclo(frac(1, 1L << n)));
  }
}

TEST(Span, SolveOverF5) {
  FSeries a(4), b(4), x(4);
  for (int i = 0; i < 4; ++i) {
    a[i] = Residue(5, i);
    b[i] = Residue(5, 1);
    x[i] = Residue(5, 2 * i + 3);
  }
  auto c = span_coordinates({a, b}, x);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], Residue(5, 2));
  EXPECT_EQ((*c)[1], Residue(5, 3));
  x[3] = Residue(5, 0);
  EXPECT_FALSE(span_coordinates({a, b}, x).has_value());
}
