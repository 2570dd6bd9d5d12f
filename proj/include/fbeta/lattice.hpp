#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fbeta/bp.hpp"

namespace fbeta {

// Z_(p)-lattice inside a rational vector space whose coordinates are tensor
// monomials, kept in echelon form. Pivot vectors are normalized so that the
// pivot coefficient is an exact power of p.
class LatticeBasis {
 public:
  struct Pivot {
    RPoly vector;
    long exponent;  // pivot coefficient is p^exponent
  };
  using CoordinateFilter = std::function<bool(const Monomial&)>;

  LatticeBasis(unsigned p, int degree, AlphabetPtr alpha, CoordinateFilter is_coordinate);

  // Lattice of phi^{-1}(BP_*BP) in the given degree, modulo pure tensors. Cached.
  static std::shared_ptr<const LatticeBasis> full(unsigned p, int degree);
  // Rebuilds a full lattice from stored pivots (for example from a cache file).
  static std::shared_ptr<const LatticeBasis> full_from_pivots(unsigned p, int degree,
                                                              std::unordered_map<Monomial, Pivot, MonomialHash> pivots);
  // Makes full(p, degree) return this basis; false if one is already present.
  static bool preload_full(std::shared_ptr<const LatticeBasis> basis);
  static bool has_full(unsigned p, int degree);
  // The p=2 quotient spanned by vL1, vL2, vR1 with relations phi^{-1}(v1^i v2^j t1^k). Cached.
  static std::shared_ptr<const LatticeBasis> kervaire_quotient(int degree);

  unsigned prime() const { return p_; }
  int degree() const { return degree_; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  bool is_coordinate(const Monomial& m) const { return is_coordinate_(m); }

  // Adds a vector to the lattice (terms outside the coordinates are dropped first).
  void insert(const RPoly& v);
  void set_pivot(const Monomial& c, Pivot pivot);

  std::size_t rank() const { return pivots_.size(); }
  const std::unordered_map<Monomial, Pivot, MonomialHash>& pivots() const { return pivots_; }
  // Largest p-power denominator among pivots.
  long denominator_exponent() const;

  // Keeps coordinate terms only.
  RPoly project(const RPoly& x) const;
  // Canonical representative of x modulo the lattice: each coordinate ends up
  // in p^e [0,1) where p^e is its pivot.
  RPoly reduce(const RPoly& x) const;

 private:
  unsigned p_;
  int degree_;
  AlphabetPtr alpha_;
  CoordinateFilter is_coordinate_;
  std::unordered_map<Monomial, Pivot, MonomialHash> pivots_;
};

struct TensorCoset {
  unsigned prime = 0;
  int degree = 0;
  RPoly representative;
  // The class has order p^order_exponent.
  int order_exponent = 0;
  std::shared_ptr<const LatticeBasis> lattice;

  bool is_zero() const { return representative.is_zero(); }
  std::string str() const;
};

TensorCoset make_coset(const RPoly& x, std::shared_ptr<const LatticeBasis> lattice);
TensorCoset coset_reduce(const RPoly& x, unsigned p, int degree);
TensorCoset kervaire_reduce(const RPoly& x, int degree);

TensorCoset operator+(const TensorCoset& a, const TensorCoset& b);
TensorCoset operator*(const Rational& c, const TensorCoset& a);

}  // namespace fbeta
