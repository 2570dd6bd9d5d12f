#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "fbeta/polynomial.hpp"

namespace fbeta {

// BP_* and BP_*BP at a prime p, with the rational tensor square BP_Q (x) BP_Q
// written in left copies vL_i and right copies vR_i. One alphabet holds all
// four families, in precedence order vL < vR < v < t.
class BPContext {
 public:
  static const BPContext& get(unsigned p);

  explicit BPContext(unsigned p);

  unsigned prime() const { return p_; }
  int nmax() const { return nmax_; }
  // Every monomial of degree below this is expressible in the alphabet.
  int degree_bound() const { return degree_bound_; }
  const AlphabetPtr& alphabet() const { return alpha_; }

  std::size_t vL(int i) const { return index(0, i); }
  std::size_t vR(int i) const { return index(1, i); }
  std::size_t v(int i) const { return index(2, i); }
  std::size_t t(int i) const { return index(3, i); }
  int generator_degree(int i) const;  // 2(p^i - 1)
  RPoly gen(std::size_t idx, unsigned power = 1) const { return RPoly::generator(alpha_, idx, power); }

  bool uses_only(const Monomial& m, const std::vector<int>& families) const;
  bool is_v_polynomial(const RPoly& f) const;      // only v's
  bool is_gamma_polynomial(const RPoly& f) const;  // v's and t's
  bool is_tensor_polynomial(const RPoly& f) const; // vL's and vR's
  // All-vL or all-vR (constants count as both).
  bool is_pure_tensor(const Monomial& m) const;

  // Hazewinkel logarithm l_n as a polynomial in the v's; l_0 = 1.
  const RPoly& log(int n) const;

  const RPoly& eta_R_generator(int n) const;
  RPoly eta_R(const RPoly& x) const;

  const RPoly& phi_inverse_t(int n) const;
  // v_i -> vL_i, t_i -> phi^{-1}(t_i).
  RPoly phi_inverse(const RPoly& g) const;
  // vL_i -> v_i, vR_i -> eta_R(v_i).
  RPoly phi(const RPoly& x) const;
  // phi^{-1} of a single Gamma-monomial (cached).
  RPoly phi_inverse_monomial(const Monomial& m) const;

  RPoly to_left(const RPoly& x) const;
  RPoly to_right(const RPoly& x) const;
  // Inverse of to_left/to_right: vL_i or vR_i -> v_i.
  RPoly from_tensor_side(const RPoly& x, int family) const;

  std::vector<Monomial> gamma_monomials(int degree) const;
  std::vector<Monomial> tensor_monomials(int degree) const;

  // Preload eta_R(v_n) (for example from a cache); checked against the recursion's degree.
  void seed_eta_R(int n, const RPoly& value) const;
  std::map<int, RPoly> eta_R_table() const;

 private:
  struct HomCache {
    std::map<std::pair<std::size_t, unsigned>, RPoly> powers;
    std::unordered_map<Monomial, RPoly, MonomialHash> monomials;
  };

  std::size_t index(int family, int i) const;
  void require_degree(int degree) const;
  const RPoly& power_image(HomCache& cache, std::size_t g, unsigned k,
                           const std::function<RPoly(std::size_t)>& image) const;
  const RPoly& monomial_image(HomCache& cache, const Monomial& m,
                              const std::function<RPoly(std::size_t)>& image) const;
  RPoly eta_R_log(int n) const;  // eta_R(l_n) = sum_j l_j t_{n-j}^{p^j}
  RPoly substitute_family(const RPoly& x, int from, int to) const;

  unsigned p_;
  int nmax_;
  int degree_bound_;
  AlphabetPtr alpha_;
  std::vector<RPoly> logs_;

  mutable std::recursive_mutex mu_;
  mutable std::map<int, RPoly> eta_gen_;
  mutable std::map<int, RPoly> phi_inv_t_;
  mutable HomCache eta_cache_;      // on v-monomials
  mutable HomCache phi_inv_cache_;  // on t-monomials
  mutable HomCache phi_cache_;      // on vR-monomials
};

}  // namespace fbeta
