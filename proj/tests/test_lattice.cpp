#include <gtest/gtest.h>

#include "fbeta/beta.hpp"
#include "fbeta/parse.hpp"

using namespace fbeta;

namespace {

RPoly P(unsigned p, const std::string& s) { return parse_polynomial(s, BPContext::get(p).alphabet()); }

}  // namespace

TEST(Lattice, DegreeFourMemberships) {
  EXPECT_TRUE(coset_reduce(P(2, "1/2*vL1*vR1"), 2, 4).is_zero());
  TensorCoset a = coset_reduce(P(2, "1/4*vL1*vR1"), 2, 4);
  EXPECT_FALSE(a.is_zero());
  EXPECT_EQ(a.order_exponent, 1);
  EXPECT_TRUE(coset_reduce(P(2, "1/8*vL1^2*vR1^2"), 2, 8).is_zero());
  EXPECT_TRUE(coset_reduce(P(2, "3*vL1*vR1^3 - 7*vL1^2*vR1^2 + vR2*vL1"), 2, 8).is_zero());
  EXPECT_TRUE(coset_reduce(P(2, "1/64*vL1^4 + 1/8*vR1^4"), 2, 8).is_zero());
}

TEST(Lattice, DegreeZero) {
  EXPECT_TRUE(coset_reduce(P(3, "1/3"), 3, 0).is_zero());
}

TEST(Lattice, IdempotentAndAdditive) {
  auto L = LatticeBasis::full(2, 16);
  RPoly x = P(2, "1/32*vL1^3*vR1^5 + 3/16*vL2*vR1^5 - 5/64*vL1^5*vR2 + 1/2*vL1*vR1^7");
  RPoly y = P(2, "7/128*vL1^2*vR1^6 - 1/4*vL2^2*vR1^2");
  RPoly rx = L->reduce(x), ry = L->reduce(y);
  EXPECT_EQ(L->reduce(rx), rx);
  EXPECT_EQ(L->reduce(rx + ry), L->reduce(x + y));
  TensorCoset c = coset_reduce(x, 2, 16);
  RPoly scaled = c.representative * rpow(Rational(2), c.order_exponent);
  EXPECT_TRUE(L->reduce(scaled).is_zero());
  EXPECT_FALSE(L->reduce(scaled / Rational(2)).is_zero());
}

TEST(Lattice, ContainsEveryPhiInverseImage) {
  for (unsigned p : {2U, 3U}) {
    const auto& bp = BPContext::get(p);
    int deg = p == 2 ? 12 : 16;
    auto L = LatticeBasis::full(p, deg);
    for (const auto& m : bp.gamma_monomials(deg)) {
      RPoly img = bp.phi_inverse_monomial(m);
      EXPECT_TRUE(L->reduce(img).is_zero()) << m.str(*bp.alphabet());
      EXPECT_TRUE(L->reduce(img * Rational(5)).is_zero());
    }
  }
}

TEST(Lattice, KervaireQuotient) {
  auto B = LatticeBasis::kervaire_quotient(4);
  EXPECT_TRUE(kervaire_reduce(P(2, "1/2*vL1*vR1"), 4).is_zero());
  EXPECT_FALSE(kervaire_reduce(P(2, "1/4*vL1*vR1"), 4).is_zero());
  EXPECT_THROW(kervaire_reduce(P(2, "vL1*vR2"), 8), std::invalid_argument);
}

TEST(Beta, XSequence) {
  EXPECT_EQ(x_sequence(0), P(2, "v2"));
  EXPECT_EQ(x_sequence(2), P(2, "v2^4 - v1^3*v2^3"));
  EXPECT_EQ(x_sequence(3), x_sequence(2).pow(2));
}

TEST(Beta, InvarianceCheck) {
  for (unsigned p : {2U, 3U, 5U}) {
    const auto& bp = BPContext::get(p);
    EXPECT_TRUE(invariance_check(bp, bp.gen(bp.v(2)), 1, 1).invariant);
    EXPECT_TRUE(invariance_check(bp, bp.gen(bp.v(1)), 1, std::nullopt).invariant);
    EXPECT_FALSE(invariance_check(bp, bp.gen(bp.v(2)), 1, std::nullopt).invariant);
  }
  const auto& bp = BPContext::get(2);
  auto cert = invariance_check(bp, x_sequence(2), 1, 4);
  ASSERT_TRUE(cert.invariant);
  RPoly v14 = bp.gen(bp.v(1), 4);
  EXPECT_EQ(cert.A * Rational(2) + cert.B * v14, cert.difference);
  EXPECT_FALSE(invariance_check(bp, x_sequence(2), 1, 5).invariant);
}

TEST(Beta, Beta22) {
  BetaData b = beta_construction(2, 2, 1, 2);
  EXPECT_EQ(b.z, P(2, "t1^4 + v1^2*t1^2"));
  EXPECT_EQ(b.coset.degree, 8);
  RPoly expected = P(2, "-1/8*vL1*vR1^3 + 5/16*vL1^2*vR1^2 - 3/8*vL1^3*vR1");
  EXPECT_TRUE(coset_reduce(b.tensor - expected, 2, 8).is_zero());
  EXPECT_EQ(b.coset.order_exponent, 1);
}

TEST(Beta, Beta44Cocycle) {
  BetaData b = beta_construction(4, 4, 1, 2);
  RPoly expect = P(2, "v1*v2^2*t1 + v2^2*t1^2 + v1^3*v2*t1^2 + v1^5*t1^3 + v1*v2*t1^4 + v1^3*t1^5 + v1^2*t1^6 + t1^8");
  EXPECT_EQ(reduce_mod_p(b.z, 2), reduce_mod_p(expect, 2));
  EXPECT_EQ(b.coset.degree, 16);
  EXPECT_FALSE(b.coset.is_zero());
}

TEST(Beta, Refusals) {
  EXPECT_THROW(beta_representative(1, 1, 2, 5), std::invalid_argument);
  EXPECT_THROW(beta_representative(2, 3, 1, 2), std::invalid_argument);
  EXPECT_THROW(alpha1_alpha_t_representative(2), std::invalid_argument);
}

TEST(Beta, OddPrimeBeta1) {
  TensorCoset b = beta_representative(1, 1, 1, 5);
  EXPECT_EQ(b.degree, 40);
  EXPECT_EQ(b.order_exponent, 1);
  TensorCoset b3 = beta_representative(1, 1, 1, 3);
  EXPECT_EQ(b3.degree, 12);
  EXPECT_EQ(b3.order_exponent, 1);
}

TEST(Beta, AlphaOneAlphaT) {
  TensorCoset a = alpha1_alpha_t_representative(1);
  EXPECT_EQ(a.order_exponent, 1);
  TensorCoset a3 = alpha1_alpha_t_representative(3);
  EXPECT_EQ(a3.order_exponent, 1);
  EXPECT_TRUE((Rational(2) * a3).is_zero());
}
