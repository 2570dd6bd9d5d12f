#include <gtest/gtest.h>

#include "fbeta/finvariant.hpp"

using namespace fbeta;

namespace {

const Orientation& level3() { return Orientation::get(2, 3); }

std::vector<std::string> names(const std::vector<Ext2Generator>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

}  // namespace

TEST(Catalog, LowDimensions) {
  EXPECT_EQ(names(ext2_catalog(3)), (std::vector<std::string>{"alpha_1 alpha_3", "beta_{2/2}"}));
  EXPECT_EQ(names(ext2_catalog(4)), (std::vector<std::string>{"alpha_1 alpha_7", "beta_{4/4}", "beta_3"}));
  EXPECT_EQ(names(ext2_catalog(5)), (std::vector<std::string>{"alpha_1 alpha_15", "beta_{8/8}", "beta_{6/2}"}));
  EXPECT_EQ(names(ext2_catalog(6)),
            (std::vector<std::string>{"alpha_1 alpha_31", "beta_{16/16}", "beta_{12/4}", "beta_11"}));
  EXPECT_EQ(ext2_catalog(8).size(), 5U);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(ext2_catalog(n).size(), static_cast<std::size_t>(n / 2 + 1)) << n;
}

TEST(ClosedForms, Shapes) {
  EXPECT_EQ(closed_form_beta(1, 2).str(), "a3^4 + a3^3");
  EXPECT_EQ(closed_form_beta(3, 1).str(), "a3^6 + 1");
  EXPECT_EQ(closed_form_beta(3, 0).str(), "a3^3 + 1");
  // (a3^8 + a3^6)^3 over F_2.
  EXPECT_EQ(closed_form_beta(3, 3).str(), "a3^24 + a3^22 + a3^20 + a3^18");
  EXPECT_THROW(closed_form_beta(2, 1), std::invalid_argument);
}

TEST(Pipeline, MatchesClosedFormsOnCatalog) {
  const auto& I = IgusaBasis::get();
  for (int n : {3, 4, 5}) {
    for (const auto& g : ext2_catalog(n)) {
      TensorCoset c = g.representative();
      EXPECT_EQ(c.order_exponent, 1) << g.name;
      FClass f = f_invariant(c, level3());
      ASSERT_TRUE(f.igusa.has_value());
      EXPECT_TRUE(equivalent(f, I.expansion(g.closed_form, f.precision))) << g.name;
      EXPECT_EQ(*f.igusa, canonical_igusa(I.expansion(g.closed_form, f.precision), f.degree, f.ambiguity)) << g.name;
      EXPECT_FALSE(f.is_zero()) << g.name;
    }
  }
}

TEST(Pipeline, AlphaOneSquared) {
  FClass f = f_invariant(alpha1_alpha_t_representative(1), level3());
  EXPECT_EQ(f.igusa->str(), "T");
}

TEST(Pipeline, AmbiguityContainsMonomials) {
  FClass f = f_invariant(beta_representative(4, 4, 1, 2), level3());
  const auto& M = level3().forms();
  for (const auto& m : M.monomials(f.degree)) {
    FSeries r = reduce_mod_p(M.expansion(CPoly::monomial(M.alphabet(), m, Cyclo(1)), f.precision), 2);
    EXPECT_TRUE(span_coordinates(f.ambiguity, r).has_value());
  }
  EXPECT_TRUE(span_coordinates(f.ambiguity, FSeries::constant(f.precision, Residue(2, 1))).has_value());
}

TEST(Pipeline, AdditiveOnCosets) {
  TensorCoset a = alpha1_alpha_t_representative(7);
  TensorCoset b = beta_representative(3, 1, 1, 2);
  FClass fa = f_invariant(a, level3()), fb = f_invariant(b, level3()), fab = f_invariant(a + b, level3());
  EXPECT_TRUE(equivalent(fab, fa.reduction + fb.reduction));
  EXPECT_EQ(fab.igusa->str(), "a3^3 + T");
  FClass zero = f_invariant(a + a, level3());
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(zero.igusa->is_zero());
}

TEST(Kervaire, ProjectionOnCatalog) {
  for (int n : {3, 4, 5}) {
    for (const auto& g : ext2_catalog(n)) {
      FClass f = f_invariant(g.representative(), level3());
      bool kervaire = g.kind == Ext2Generator::Kind::Beta && g.t == (1 << (n - 2)) && g.s == g.t;
      EXPECT_EQ(kervaire_projection(f), kervaire ? 1 : 0) << g.name;
    }
  }
}

TEST(LevelOne, LauresAtFive) {
  const auto& o = Orientation::get(5, 1, OrientationKind::Eisenstein);
  FClass f = f_invariant(beta_representative(1, 1, 1, 5), o);
  EXPECT_EQ(f.degree, 40);
  EXPECT_TRUE(equivalent(f, laures_closed_form(5)));
  EXPECT_FALSE(f.is_zero());
  EXPECT_FALSE(f.igusa.has_value());
}

TEST(LevelOne, BetaTAtFive) {
  const auto& o = Orientation::get(5, 1);
  for (int t : {1, 2}) {
    FClass f = f_invariant(beta_representative(t, 1, 1, 5), o);
    EXPECT_TRUE(equivalent(f, beta_t_closed_form(t, o))) << t;
    EXPECT_FALSE(f.is_zero()) << t;
  }
}

TEST(LevelOne, PrimeMismatch) {
  EXPECT_THROW(f_invariant(beta_representative(1, 1, 1, 5), level3()), std::invalid_argument);
}
