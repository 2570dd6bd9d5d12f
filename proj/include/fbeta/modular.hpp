#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fbeta/bp.hpp"
#include "fbeta/series.hpp"

namespace fbeta {

// Nontrivial character mod 3.
int chi3(long n);
// sum over d | n of chi3(d) d^k.
Integer sigma_chi(unsigned k, long n);
// Entries 0 .. count-1 (entry 0 is 0), by sieving.
std::vector<Integer> sigma_chi_table(unsigned k, std::size_t count);
std::vector<Integer> sigma_table(unsigned k, std::size_t count);

// First n <= limit with sigma_0(n/2) + sigma_0(n) != sigma_2(n) mod 2 (twisted by chi3), or 0.
long sigma_congruence_counterexample(long limit);

// E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n.
RSeries eisenstein_e4(std::size_t precision);
RSeries eisenstein_e6(std::size_t precision);
// q prod (1 - q^n)^24.
RSeries delta_product(std::size_t precision);

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with coefficients in a graded ring.
struct WeierstrassModel {
  AlphabetPtr alphabet;
  RPoly a1, a2, a3, a4, a6;

  RPoly discriminant() const;
};

// c_0 .. c_{count-1} (c_0 = 0) with omega = sum_{n>=1} c_n z^{n-1} dz in the
// parameter z = -x/y, so that log(z) = sum c_n z^n / n.
std::vector<RPoly> invariant_differential(const WeierstrassModel& E, std::size_t count);

// Modular forms of level 1 (generators g2, g3) or level 3 (generators a1, a3),
// graded by twice the weight, with q-expansions at the cusp infinity.
class ModularForms {
 public:
  static const ModularForms& get(int level);

  explicit ModularForms(int level);

  int level() const { return level_; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  const WeierstrassModel& model() const { return model_; }
  CPoly gen(std::string_view name) const { return CPoly::generator(alpha_, name); }

  // q^0 evaluation, a ring map to Q(zeta).
  Cyclo cusp_value(const CPoly& f) const;
  Cyclo cusp_value(const RPoly& f) const { return cusp_value(to_cyclo(f)); }

  CSeries expansion(const CPoly& f, std::size_t precision) const;
  CSeries expansion(const RPoly& f, std::size_t precision) const { return expansion(to_cyclo(f), precision); }

  // Every monomial of the given degree, lowest first.
  std::vector<Monomial> monomials(int degree) const;

 private:
  // Every generator's expansion is scalar(g) * series(g) with a rational series.
  const RSeries& monomial_series(const Monomial& m, std::size_t precision) const;
  RSeries generator_series(std::size_t g, std::size_t precision) const;

  int level_;
  AlphabetPtr alpha_;
  WeierstrassModel model_;
  std::vector<Cyclo> scalar_;
  std::vector<Cyclo> cusp_;

  mutable std::recursive_mutex mu_;
  mutable std::map<std::size_t, std::unordered_map<Monomial, RSeries, MonomialHash>> cache_;
};

enum class OrientationKind {
  FormalGroup,  // images read off from the logarithm of the curve
  Eisenstein,   // level 1 only: v1 -> E_{p-1}, the rest as FormalGroup
};

// A ring map BP_* -> M_* attached to the level-3 curve at p = 2 or to the level-1
// curve at p >= 5.
class Orientation {
 public:
  static const Orientation& get(unsigned p, int level, OrientationKind kind = OrientationKind::FormalGroup);

  Orientation(unsigned p, int level, OrientationKind kind);

  unsigned prime() const { return p_; }
  int level() const { return forms_->level(); }
  OrientationKind kind() const { return kind_; }
  const ModularForms& forms() const { return *forms_; }
  const BPContext& bp() const { return *bp_; }

  // Logarithm coefficient a_n, normalized to a_1 = 1. At level 1 the parameter is
  // rescaled so that a_n = 2^{n-1} c_n.
  RPoly log_coefficient(std::size_t n) const;
  // The level-1 coefficient before normalization: -2 a_n.
  RPoly unnormalized_log_coefficient(std::size_t n) const;

  // alpha(v_n) for 1 <= n <= nmax, and its q^0 value.
  const RPoly& image(int n) const;
  Cyclo cusp_image(int n) const;

  // alpha on a polynomial in the v's.
  CPoly apply(const RPoly& x) const;
  // (-q^0 (x) id) o (alpha (x) alpha) on a polynomial in the vL's and vR's.
  CPoly apply_tensor(const RPoly& x) const;
  // rho = apply_tensor o phi^{-1} on a polynomial in v's and t's; rho(1) = -1.
  CPoly rho(const RPoly& g) const;

 private:
  void ensure_log(std::size_t count) const;
  void ensure_images(int n) const;

  unsigned p_;
  OrientationKind kind_;
  const ModularForms* forms_;
  const BPContext* bp_;

  mutable std::recursive_mutex mu_;
  mutable std::vector<RPoly> log_;     // normalized a_n
  mutable std::vector<RPoly> images_;  // images_[n] = alpha(v_n), images_[0] unused
  mutable std::vector<Cyclo> cusp_images_;
};

// Divided congruences are inhomogeneous forms; the degree-2k part is the weight-k part.
std::map<int, CPoly> weight_parts(const CPoly& f);
// Diamond operator: multiply the weight-k part by a^k.
CPoly diamond(const CPoly& f, const Rational& a);
// q-expansion is p-integral to the given precision.
bool is_divided_congruence(const CPoly& f, const ModularForms& forms, unsigned p, std::size_t precision);

// Katz's d_n: sum_{i=0}^{n} d_{n-i}^{p^i} / p^i = a_{p^n} / p^n with d_0 = 1.
CPoly katz_d(int n, const Orientation& o);

// Coordinates of target in the F_q-span of columns, or nullopt. The columns need not
// be independent; the returned solution sets free coordinates to zero.
std::optional<std::vector<Residue>> span_coordinates(const std::vector<FSeries>& columns, const FSeries& target);
// Basis of the linear relations among the columns.
std::vector<std::vector<Residue>> span_kernel(const std::vector<FSeries>& columns);
// Rank of the columns over the residue field.
std::size_t span_rank(const std::vector<FSeries>& columns);

// Reduction of a divided congruence at level 3 and p = 2, expressed in the basis
// a3^i T^j (j <= 1) of the Igusa ring, where T = (q^0(a1) - a1)/2 reduced mod 2.
class IgusaBasis {
 public:
  static const IgusaBasis& get();

  // Alphabet {T, a3} used for Igusa polynomials.
  const AlphabetPtr& alphabet() const { return alpha_; }
  FSeries t_bar(std::size_t precision) const;
  FSeries a3_bar(std::size_t precision) const;
  FSeries expansion(const FPoly& f, std::size_t precision) const;

  // Express x (mod 2 q-expansion) using a3-powers up to max_a3_power. Throws if the
  // basis is degenerate at this precision; nullopt if x is not in the span.
  std::optional<FPoly> express(const FSeries& x, unsigned max_a3_power) const;

 private:
  IgusaBasis();
  AlphabetPtr alpha_;
};

}  // namespace fbeta
