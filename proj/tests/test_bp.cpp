#include <gtest/gtest.h>

#include <chrono>

#include "fbeta/bp.hpp"
#include "fbeta/parse.hpp"

using namespace fbeta;

namespace {

RPoly P(const BPContext& bp, const std::string& s) { return parse_polynomial(s, bp.alphabet()); }

}  // namespace

TEST(BP, Sizes) {
  EXPECT_EQ(BPContext::get(2).nmax(), 6);
  EXPECT_EQ(BPContext::get(3).nmax(), 4);
  EXPECT_EQ(BPContext::get(5).nmax(), 2);
  EXPECT_EQ(BPContext::get(2).generator_degree(3), 14);
  EXPECT_THROW(BPContext(4), std::invalid_argument);
}

TEST(BP, Logarithms) {
  const auto& bp = BPContext::get(2);
  EXPECT_EQ(bp.log(1), P(bp, "1/2*v1"));
  EXPECT_EQ(bp.log(2), P(bp, "1/2*v2 + 1/4*v1^3"));
  const auto& b3 = BPContext::get(3);
  EXPECT_EQ(b3.log(2), P(b3, "1/3*v2 + 1/9*v1^4"));
}

TEST(BP, EtaRLowGenerators) {
  for (unsigned p : {2U, 3U, 5U}) {
    const auto& bp = BPContext::get(p);
    EXPECT_EQ(bp.eta_R_generator(1), bp.gen(bp.v(1)) + bp.gen(bp.t(1)) * Rational(p));
  }
  const auto& bp = BPContext::get(2);
  EXPECT_EQ(bp.eta_R_generator(2), P(bp, "v2 + 2*t2 - 3*v1^2*t1 - 5*v1*t1^2 - 4*t1^3"));
  FPoly r = reduce_mod_p(bp.eta_R_generator(2), 2);
  EXPECT_EQ(r, reduce_mod_p(P(bp, "v2 + v1^2*t1 + v1*t1^2"), 2));
}

TEST(BP, EtaRIsRingMap) {
  const auto& bp = BPContext::get(2);
  RPoly x = P(bp, "v1^2 + 3*v2"), y = P(bp, "v1*v2 - v1^4");
  EXPECT_EQ(bp.eta_R(x * y), bp.eta_R(x) * bp.eta_R(y));
  EXPECT_THROW(bp.eta_R(P(bp, "t1")), std::invalid_argument);
}

TEST(BP, PhiInverseGenerators) {
  const auto& bp = BPContext::get(2);
  EXPECT_EQ(bp.phi_inverse_t(1), P(bp, "1/2*vR1 - 1/2*vL1"));
  EXPECT_EQ(bp.phi_inverse_t(2),
            P(bp, "1/2*vR2 - 1/2*vL2 + 1/4*vR1^3 - 1/8*vL1*vR1^2 + 1/4*vL1^2*vR1 - 3/8*vL1^3"));
}

TEST(BP, PhiInverseOfT1T2) {
  const auto& bp = BPContext::get(2);
  RPoly x = bp.phi_inverse(P(bp, "t1*t2"));
  EXPECT_EQ(x.coefficient(Monomial::from_exponents(*bp.alphabet(), {1, 0, 0, 0, 0, 0, 0, 1})), Rational(-1, 4));
  Monomial sq = Monomial::generator(*bp.alphabet(), bp.vL(1), 2) * Monomial::generator(*bp.alphabet(), bp.vR(1), 2);
  EXPECT_EQ(x.coefficient(sq), Rational(3, 16));
}

TEST(BP, RoundTrips) {
  const auto& bp = BPContext::get(2);
  for (int d : {2, 6, 8, 12, 14}) {
    for (const auto& m : bp.gamma_monomials(d)) {
      RPoly g = RPoly::monomial(bp.alphabet(), m, Rational(1));
      EXPECT_EQ(bp.phi(bp.phi_inverse(g)), g) << m.str(*bp.alphabet());
    }
    for (const auto& m : bp.tensor_monomials(d)) {
      RPoly x = RPoly::monomial(bp.alphabet(), m, Rational(1));
      EXPECT_EQ(bp.phi_inverse(bp.phi(x)), x) << m.str(*bp.alphabet());
    }
  }
  const auto& b3 = BPContext::get(3);
  for (const auto& m : b3.gamma_monomials(16)) {
    RPoly g = RPoly::monomial(b3.alphabet(), m, Rational(1));
    EXPECT_EQ(b3.phi(b3.phi_inverse(g)), g);
  }
}

TEST(BP, GammaMonomialCounts) {
  const auto& bp = BPContext::get(2);
  EXPECT_EQ(bp.gamma_monomials(4).size(), 3U);
  EXPECT_EQ(bp.gamma_monomials(8).size(), 9U);
  EXPECT_EQ(bp.gamma_monomials(16).size(), 34U);
  EXPECT_THROW(bp.gamma_monomials(bp.degree_bound()), std::out_of_range);
}

TEST(BP, LeadingTermOfPhiInverse) {
  const auto& bp = BPContext::get(2);
  for (const auto& m : bp.gamma_monomials(12)) {
    RPoly x = bp.phi_inverse_monomial(m);
    Monomial lead;
    int tw = 0;
    for (int i = 1; i <= bp.nmax(); ++i) {
      if (m[bp.v(i)]) lead.set(*bp.alphabet(), bp.vL(i), m[bp.v(i)]);
      if (m[bp.t(i)]) lead.set(*bp.alphabet(), bp.vR(i), m[bp.t(i)]);
      tw += static_cast<int>(m[bp.t(i)]);
    }
    EXPECT_EQ(x.leading_term().first, lead);
    EXPECT_EQ(x.leading_term().second, rpow(Rational(2), -tw));
  }
}
