#include <gtest/gtest.h>

#include <random>

#include "fbeta/bp.hpp"
#include "fbeta/cobar.hpp"

using namespace fbeta;

namespace {

CobarElement random_element(std::mt19937_64& rng, std::size_t length) {
  const auto& bp = BPContext::get(2);
  std::uniform_int_distribution<int> e(0, 2), c(-4, 4), nterms(1, 3);
  CobarElement x(length);
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    TensorWord w;
    for (std::size_t i = 0; i < length; ++i)
      w.push_back(Monomial::from_exponents(*bp.alphabet(), {}) *
                  Monomial::generator(*bp.alphabet(), bp.v(1), static_cast<unsigned>(e(rng))) *
                  Monomial::generator(*bp.alphabet(), bp.v(2), static_cast<unsigned>(e(rng) / 2)));
    x.add(w, frac(c(rng), 1 + std::abs(c(rng))));
  }
  return x;
}

}  // namespace

TEST(Cobar, DifferentialSquaresToZero) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    for (std::size_t len : {1U, 2U, 3U}) {
      CobarElement x = random_element(rng, len);
      EXPECT_TRUE(differential(differential(x)).is_zero());
      EXPECT_TRUE(quotient_differential(quotient_differential(project_mod_sigma(x))).is_zero());
      EXPECT_EQ(project_mod_sigma(differential(x)), quotient_differential(project_mod_sigma(x)));
    }
  }
}

TEST(Cobar, ContractingHomotopy) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    for (std::size_t len : {2U, 3U}) {
      CobarElement x = random_element(rng, len);
      EXPECT_EQ(differential(contracting_homotopy(x)) + contracting_homotopy(differential(x)), x);
      // Words with the constant past position 1 stay in Sigma under H.
      CobarElement s = coface(random_element(rng, len), 2 + trial % (len - 1));
      EXPECT_TRUE(project_mod_sigma(contracting_homotopy(s)).is_zero());
    }
  }
}

TEST(Cobar, CosimplicialIdentity) {
  std::mt19937_64 rng(13);
  CobarElement x = random_element(rng, 2);
  for (std::size_t i = 0; i <= 2; ++i) {
    EXPECT_EQ(codegeneracy(coface(x, i), std::min<std::size_t>(i, 1)), x);
    if (i > 0) EXPECT_EQ(codegeneracy(coface(x, i), i - 1), x);
  }
}
