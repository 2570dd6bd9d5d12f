#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbeta/beta.hpp"
#include "fbeta/modular.hpp"

namespace fbeta {

inline constexpr std::size_t kDefaultPrecision = 200;

// The f-invariant of a class in Ext^{2,2k}, pushed into D/pD: an integral divided
// congruence p^m F + g_0 + g_k (g_0 constant, g_k of weight k) and its reduction.
struct FClass {
  unsigned prime = 0;
  int level = 0;
  int degree = 0;  // 2k
  std::size_t precision = 0;
  CPoly divided;
  FSeries reduction;
  // Reductions of a W-basis of the integral elements of K + M_k(K); the class is
  // defined modulo their span, which contains 1 and the reduced weight-k monomials.
  std::vector<FSeries> ambiguity;
  // Level 3: canonical coordinates in the basis a3^i T^j (see canonical_igusa).
  std::optional<FPoly> igusa;

  int weight() const { return degree / 2; }
  bool is_zero() const;
  std::string str() const;
};

FClass f_invariant(const TensorCoset& c, const Orientation& o, std::size_t precision = kDefaultPrecision);

// x agrees with the class modulo the ambiguity span.
bool equivalent(const FClass& f, const FSeries& x);
bool equivalent(const FClass& f, const FClass& g);

// Igusa coordinates of x reduced modulo the part of the ambiguity inside the Igusa
// span, pivoting on the lowest basis elements. The coordinates of 1 and a3^j
// (3j <= k) always come out zero.
FPoly canonical_igusa(const FSeries& x, int degree, const std::vector<FSeries>& ambiguity);

// b^t - (T^p - T + b)^t with T = (alpha(v1) - q^0(alpha(v1)))/p and b = q^0(alpha(v2)) mod p.
FSeries beta_t_closed_form(int t, const Orientation& o, std::size_t precision = kDefaultPrecision);
// (E_{p-1} - 1)/p^2 - ((E_{p-1} - 1)/p)^p / p times p, reduced mod p (level 1, p = 5 or 7).
FSeries laures_closed_form(unsigned p, std::size_t precision = kDefaultPrecision);

// A generator of Ext^{2,2^n} at p = 2.
struct Ext2Generator {
  enum class Kind { Alpha1AlphaT, Beta };
  Kind kind;
  int t = 0;  // alpha_1 alpha_t, or beta_{t/s}
  int s = 0;
  std::string name;
  FPoly closed_form;  // in the Igusa alphabet {T, a3}
  int degree = 0;

  TensorCoset representative() const;
};

// alpha_1 alpha_{2^{n-1}-1} and beta_{s 2^i, 2^i} with s odd and (3s - 1) 2^{i+1} = 2^n,
// omitting (s, i) = (1, 0). Requires n >= 2.
std::vector<Ext2Generator> ext2_catalog(int n);

// Closed forms at level 3: T for alpha_1 alpha_t; for beta_{s 2^i, 2^i}: 1 + a3^s (i = 0),
// 1 + a3^{2s} (i = 1), (a3^{2^i} + a3^{3 2^{i-2}})^s (i >= 2).
FPoly closed_form_alpha1_alpha_t();
FPoly closed_form_beta(int s, int i);

// Coefficient of a3^{2^{n-2}} in a class of degree 2^n, as 0 or 1.
int kervaire_projection(const FClass& f);

}  // namespace fbeta
