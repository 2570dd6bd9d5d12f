#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbeta/lattice.hpp"
#include "fbeta/series.hpp"

namespace fbeta {

// Largest index of Chern classes, power sums and logarithm coefficients handled here.
inline constexpr int kMaxChernIndex = 8;
inline constexpr int kMaxLogIndex = 4;

// {l1 .. l4}, |l_i| = 2(2^i - 1).
const AlphabetPtr& genus_alphabet();
// {v1 .. v4, c1 .. c8} with |c_j| = 2j.
const AlphabetPtr& symmetric_alphabet();
// {e1 .. e8, p1 .. p8} with |e_j| = |p_j| = 2j.
const AlphabetPtr& newton_alphabet();
// {c1_0 .. c8_0, c1_1 .. c8_1}: Chern classes of the two sides of a (U,fr)^2-manifold.
const AlphabetPtr& two_sided_alphabet();

// x / exp(x) for the 2-typical logarithm sum l_i x^{2^i}, coefficients of x^0 .. x^{m-1}.
PolySeries genus_Q(std::size_t m);
// l_i -> Hazewinkel polynomial in v's (p = 2), from genus_alphabet to symmetric_alphabet.
RPoly l_to_v(const RPoly& f);

// Newton's identities in newton_alphabet.
RPoly power_sum_in_elementary(int k);
RPoly elementary_in_power_sums(int k);

struct SymmetricExpansion {
  int degree = 0;  // 2i
  RPoly poly;      // over symmetric_alphabet

  // Coefficient (a v-polynomial) of each monomial in the c's.
  std::map<std::string, RPoly> by_chern_monomial() const;
  std::string str() const { return poly.str(); }
};

// Degree-2i part of prod_l Q(x_l) in the elementary symmetric classes, l's written in v's. Cached.
const SymmetricExpansion& pi_component(int degree);

// K^{(2^n)} reduced in B_{2^n}. Dimensions 4 and 8 follow the known reduction (phi^{-1}(t1 t2)
// removes v1 (x) v2 in dimension 8). Larger dimensions are experimental: they try
// phi^{-1} of the Gamma-monomials v1^i v2^j t1^k t2 and list whatever stays outside B.
struct KervaireReduction {
  int dimension = 0;
  bool complete = false;
  // Set when every tensor monomial was brought into B with integral multipliers.
  std::optional<FPoly> polynomial;  // over two_sided_alphabet, F_2
  // Parity contribution of each split Pi^{(i)} (x) Pi^{(dim - i)}, keyed by i.
  std::map<int, FPoly> contributions;
  std::vector<std::string> gamma_monomials_used;
  // Tensor monomials outside B that the available images could not remove, with the Chern
  // monomial whose coefficient they carry.
  std::vector<std::string> unresolved;
};

KervaireReduction kervaire_reduction(int dimension);
// Dimension 4 or 8 only.
FPoly kervaire_chern_polynomial(int dimension);

struct ChernData {
  int dimension = 0;
  // Chern number <mu, [X]> keyed by a monomial such as "c1_0*c1_1^3".
  std::map<std::string, Integer> numbers;
};

struct ManifoldVerdict {
  int dimension = 0;
  Integer value;  // the polynomial (integer lift, coefficients 1) on the supplied numbers
  bool kervaire_one = false;
  std::string polynomial;

  std::string verdict() const { return kervaire_one ? "kervaire-one" : "bounds-framed"; }
};

// Monomials whose Chern numbers evaluate_manifold needs.
std::vector<std::string> required_chern_numbers(int dimension);
ManifoldVerdict evaluate_manifold(const ChernData& data);

}  // namespace fbeta
