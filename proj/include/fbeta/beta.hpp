#pragma once

#include <optional>

#include "fbeta/lattice.hpp"

namespace fbeta {

// eta_R(x) - x = p^r A + v1^s B with A, B integral.
struct InvarianceCertificate {
  bool invariant = false;
  RPoly difference;  // eta_R(x) - x
  RPoly A;
  RPoly B;
  std::string reason;  // first obstruction when not invariant
};

InvarianceCertificate invariance_check(const BPContext& bp, const RPoly& x, unsigned r, std::optional<unsigned> s);

// x_0 = v2, x_1 = v2^2, x_2 = v2^4 - v1^3 v2^3, x_n = x_{n-1}^2 at p = 2.
RPoly x_sequence(int n);

struct BetaData {
  unsigned p = 0;
  int t = 0, s = 0, r = 0;
  int n = 0;        // t = p^n t'
  RPoly x;          // x_n^{t'}
  RPoly y;          // lift with coefficients in [0, p^r)
  RPoly d;          // eta_R(y) - y mod p^r
  RPoly z;          // d / v1^s
  RPoly tensor;     // phi^{-1}(z) / p^r
  TensorCoset coset;
};

// Degree of beta_{t/s,r}: 2t(p^2-1) - 2s(p-1).
int beta_degree(unsigned p, int t, int s);

BetaData beta_construction(int t, int s, int r, unsigned p);
TensorCoset beta_representative(int t, int s, int r, unsigned p);

// (vL1 vR1^t)/4 at p = 2, t odd.
TensorCoset alpha1_alpha_t_representative(int t);

}  // namespace fbeta
