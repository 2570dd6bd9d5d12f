#include <gtest/gtest.h>

#include "fbeta/chern.hpp"
#include "fbeta/parse.hpp"

using namespace fbeta;

namespace {

RPoly sym(const std::string& s) { return parse_polynomial(s, symmetric_alphabet()); }
FPoly two_sided_mod2(const std::string& s) { return reduce_mod_p(parse_polynomial(s, two_sided_alphabet()), 2); }

// Product alphabet {v1 .. v4, x1 .. xm}.
AlphabetPtr variables_alphabet(int m) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 1; i <= kMaxLogIndex; ++i) {
    names.push_back("v" + std::to_string(i));
    degrees.push_back(2 * ((1 << i) - 1));
  }
  for (int j = 1; j <= m; ++j) {
    names.push_back("x" + std::to_string(j));
    degrees.push_back(2);
  }
  return make_alphabet(names, degrees);
}

}  // namespace

TEST(Genus, LowCoefficients) {
  PolySeries q = genus_Q(4);
  const AlphabetPtr& A = genus_alphabet();
  EXPECT_EQ(q[0], RPoly(A, Rational(1)));
  EXPECT_EQ(q[1], parse_polynomial("l1", A));
  EXPECT_EQ(q[2], parse_polynomial("-l1^2", A));
  EXPECT_EQ(q[3], parse_polynomial("2*l1^3 + l2", A));
}

TEST(Genus, AdditiveGroupGivesOne) {
  PolySeries q = genus_Q(12);
  for (std::size_t k = 1; k < q.precision(); ++k) {
    // Every coefficient beyond x^0 involves some l_i.
    for (const auto& [m, c] : q[k].terms()) EXPECT_FALSE(m.is_one()) << k;
  }
  EXPECT_THROW(genus_Q(1), std::invalid_argument);
}

TEST(Newton, RoundTrips) {
  const AlphabetPtr& A = newton_alphabet();
  SubstitutionMap<Rational> p_to_e(A->size()), e_to_p(A->size());
  for (int k = 1; k <= kMaxChernIndex; ++k) {
    p_to_e[static_cast<std::size_t>(kMaxChernIndex + k - 1)] = power_sum_in_elementary(k);
    e_to_p[static_cast<std::size_t>(k - 1)] = elementary_in_power_sums(k);
  }
  for (int k = 1; k <= kMaxChernIndex; ++k) {
    RPoly e = RPoly::generator(A, static_cast<std::size_t>(k - 1));
    RPoly p = RPoly::generator(A, static_cast<std::size_t>(kMaxChernIndex + k - 1));
    EXPECT_EQ(substitute(elementary_in_power_sums(k), p_to_e, A), e) << k;
    EXPECT_EQ(substitute(power_sum_in_elementary(k), e_to_p, A), p) << k;
  }
  EXPECT_EQ(power_sum_in_elementary(2), parse_polynomial("e1^2 - 2*e2", A));
  EXPECT_EQ(power_sum_in_elementary(3), parse_polynomial("e1^3 - 3*e1*e2 + 3*e3", A));
}

TEST(Pi, LowComponents) {
  EXPECT_EQ(pi_component(0).poly, sym("1"));
  EXPECT_EQ(pi_component(2).poly, sym("1/2*v1*c1"));
  EXPECT_EQ(pi_component(4).poly, sym("3/4*v1^2*c2 - 1/4*v1^2*c1^2"));
  EXPECT_EQ(pi_component(6).poly, sym("1/2*v1^3*c1^3 - 13/8*v1^3*c1*c2 + 2*v1^3*c3 + 1/2*v2*c1^3 - 3/2*v2*c1*c2 + "
                                      "3/2*v2*c3"));
  auto parts = pi_component(6).by_chern_monomial();
  EXPECT_EQ(parts.at("c3"), sym("2*v1^3 + 3/2*v2"));
}

// Substituting c_j -> e_j(x_1 .. x_m) into Pi^{(2i)} gives the degree-2i part of prod Q(x_l).
TEST(Pi, MatchesDirectProduct) {
  PolySeries q = genus_Q(6);
  for (int i = 1; i <= 4; ++i) {
    for (int m = i; m <= 4; ++m) {
      AlphabetPtr X = variables_alphabet(m);
      SubstitutionMap<Rational> v_images(symmetric_alphabet()->size());
      for (int k = 1; k <= kMaxLogIndex; ++k)
        v_images[static_cast<std::size_t>(k - 1)] = RPoly::generator(X, static_cast<std::size_t>(k - 1));
      // e_j as polynomials in x's
      std::vector<RPoly> e(static_cast<std::size_t>(kMaxChernIndex + 1), RPoly(X));
      e[0] = RPoly(X, Rational(1));
      for (int l = 1; l <= m; ++l) {
        RPoly x = RPoly::generator(X, static_cast<std::size_t>(kMaxLogIndex + l - 1));
        for (int j = l; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x;
      }
      for (int j = 1; j <= kMaxChernIndex; ++j)
        v_images[static_cast<std::size_t>(kMaxLogIndex + j - 1)] = e[static_cast<std::size_t>(j)];
      RPoly via_c = substitute(pi_component(2 * i).poly, v_images, X, false);

      RPoly prod(X, Rational(1));
      for (int l = 1; l <= m; ++l) {
        RPoly x = RPoly::generator(X, static_cast<std::size_t>(kMaxLogIndex + l - 1));
        RPoly factor(X);
        for (int k = 0; k <= i; ++k) factor += l_to_v(q[static_cast<std::size_t>(k)]).relabel(X) * x.pow(k);
        prod = prod * factor;
      }
      // Degree-2i in the x's: total degree 0 after the v's.
      RPoly direct = prod.filter([&](const Monomial& mm, const Rational&) {
        unsigned xs = 0;
        for (int l = 1; l <= m; ++l) xs += mm[static_cast<std::size_t>(kMaxLogIndex + l - 1)];
        return static_cast<int>(xs) == i;
      });
      EXPECT_EQ(via_c, direct) << "i=" << i << " m=" << m;
    }
  }
}

TEST(Kervaire, Dimension4) {
  EXPECT_EQ(kervaire_chern_polynomial(4), two_sided_mod2("c1_0*c1_1"));
}

TEST(Kervaire, Dimension8) {
  EXPECT_EQ(kervaire_chern_polynomial(8),
            two_sided_mod2("c1_0*c1_1^3 + c1_0*c1_1*c2_1 + c1_0*c3_1 + c2_0*c2_1 + c2_0*c1_1^2 + c1_0^2*c2_1 + "
                           "c1_0^2*c1_1^2"));
  KervaireReduction r = kervaire_reduction(8);
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(r.gamma_monomials_used, std::vector<std::string>{"t1*t2"});
  // (3c2 - c1^2)(3c2' - c1'^2) = (c2 + c1^2)(c2' + c1'^2) mod 2
  EXPECT_EQ(r.contributions.at(4), two_sided_mod2("9*c2_0*c2_1 - 3*c2_0*c1_1^2 - 3*c1_0^2*c2_1 + c1_0^2*c1_1^2"));
  EXPECT_EQ(r.contributions.at(4), two_sided_mod2("c2_0*c2_1 + c2_0*c1_1^2 + c1_0^2*c2_1 + c1_0^2*c1_1^2"));
  EXPECT_EQ(r.contributions.at(2), two_sided_mod2("c1_0*c1_1^3 - 3*c1_0*c1_1*c2_1 + 3*c1_0*c3_1"));
  EXPECT_TRUE(r.contributions.at(6).is_zero());
}

TEST(Kervaire, UnsupportedDimension) {
  EXPECT_THROW(kervaire_chern_polynomial(16), std::invalid_argument);
  EXPECT_THROW(kervaire_chern_polynomial(6), std::invalid_argument);
}

TEST(Manifold, Verdicts) {
  ChernData d4{4, {{"c1_0*c1_1", 1}}};
  EXPECT_EQ(evaluate_manifold(d4).verdict(), "kervaire-one");
  d4.numbers["c1_0*c1_1"] = 0;
  EXPECT_EQ(evaluate_manifold(d4).verdict(), "bounds-framed");

  ChernData d8{8, {}};
  for (const auto& m : required_chern_numbers(8)) d8.numbers[m] = 0;
  EXPECT_EQ(required_chern_numbers(8).size(), 7U);
  EXPECT_EQ(evaluate_manifold(d8).verdict(), "bounds-framed");
  d8.numbers["c1_0*c3_1"] = 1;
  d8.numbers["c2_0*c2_1"] = 1;
  ManifoldVerdict v = evaluate_manifold(d8);
  EXPECT_EQ(v.value, 2);
  EXPECT_EQ(v.verdict(), "bounds-framed");
  d8.numbers["c2_0*c2_1"] = 4;
  EXPECT_TRUE(evaluate_manifold(d8).kervaire_one);

  // Key order inside a monomial does not matter.
  ChernData swapped{4, {{"c1_1*c1_0", 3}}};
  EXPECT_TRUE(evaluate_manifold(swapped).kervaire_one);

  ChernData missing{8, {{"c1_0*c3_1", 1}}};
  EXPECT_THROW(evaluate_manifold(missing), std::invalid_argument);
  ChernData bad{4, {{"c9_0", 1}}};
  EXPECT_THROW(evaluate_manifold(bad), std::invalid_argument);
}

// Dimension 16: the t2-family alone cannot clear v1 (x) v3, so the hook must report it.
TEST(Kervaire, Dimension16HookReportsGaps) {
  KervaireReduction r = kervaire_reduction(16);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.polynomial.has_value());
  EXPECT_FALSE(r.gamma_monomials_used.empty());
  bool saw_v3 = false;
  for (const auto& u : r.unresolved) saw_v3 |= u.rfind("vL1*vR3 ", 0) == 0;
  EXPECT_TRUE(saw_v3);
  EXPECT_THROW(kervaire_reduction(12), std::invalid_argument);
}
