#include "fbeta/beta.hpp"

#include <stdexcept>

namespace fbeta {

InvarianceCertificate invariance_check(const BPContext& bp, const RPoly& x, unsigned r, std::optional<unsigned> s) {
  InvarianceCertificate cert;
  cert.difference = bp.eta_R(x) - x;
  Rational pr(ulpow(bp.prime(), r));
  Monomial v1s;
  if (s) v1s = Monomial::generator(*bp.alphabet(), bp.v(1), *s);
  TermAccumulator<Rational> a(bp.alphabet()), b(bp.alphabet());
  for (const auto& [m, c] : cert.difference.terms()) {
    if (s && v1s.divides(m)) {
      b.add(m / v1s, c);
      continue;
    }
    Rational q = c / pr;
    if (!is_p_integral(q, bp.prime())) {
      cert.reason = "term " + to_string(c) + "*" + m.str(*bp.alphabet()) + " is not in the ideal";
      return cert;
    }
    a.add(m, q);
  }
  cert.A = std::move(a).finish();
  cert.B = std::move(b).finish();
  cert.invariant = true;
  return cert;
}

RPoly x_sequence(int n) {
  if (n < 0) throw std::invalid_argument("x_sequence: n must be non-negative");
  const BPContext& bp = BPContext::get(2);
  RPoly v1 = bp.gen(bp.v(1)), v2 = bp.gen(bp.v(2));
  if (n == 0) return v2;
  if (n == 1) return v2.pow(2);
  RPoly x = v2.pow(4) - v1.pow(3) * v2.pow(3);
  for (int i = 3; i <= n; ++i) x = x * x;
  return x;
}

int beta_degree(unsigned p, int t, int s) {
  int pp = static_cast<int>(p);
  return 2 * t * (pp * pp - 1) - 2 * s * (pp - 1);
}

BetaData beta_construction(int t, int s, int r, unsigned p) {
  if (t < 1 || s < 1 || r < 1) throw std::invalid_argument("beta: indices must be positive");
  if (r > 1) throw std::invalid_argument("r>1 unsupported");
  const BPContext& bp = BPContext::get(p);
  BetaData out;
  out.p = p;
  out.t = t;
  out.s = s;
  out.r = r;
  int tp = t;
  while (tp % static_cast<int>(p) == 0) {
    tp /= static_cast<int>(p);
    ++out.n;
  }
  if (p == 2) {
    out.x = x_sequence(out.n).pow(static_cast<unsigned>(tp));
  } else {
    if (out.n > 0) throw std::invalid_argument("beta: t divisible by p is only supported at p=2");
    out.x = bp.gen(bp.v(2), static_cast<unsigned>(tp));
  }
  int deg = beta_degree(p, t, s);
  if (deg <= 0) throw std::invalid_argument("beta: s too large for t");
  if (deg >= bp.degree_bound())
    throw std::invalid_argument("beta: degree " + std::to_string(deg) + " exceeds the supported range");

  auto cert = invariance_check(bp, out.x, static_cast<unsigned>(r), static_cast<unsigned>(s));
  if (!cert.invariant)
    throw std::invalid_argument("beta_{" + std::to_string(t) + "/" + std::to_string(s) + "," + std::to_string(r) +
                                "}: ideal is not invariant (" + cert.reason + ")");

  Monomial v1s = Monomial::generator(*bp.alphabet(), bp.v(1), static_cast<unsigned>(s));
  RPoly xs = out.x.filter([&v1s](const Monomial& m, const Rational&) { return !v1s.divides(m); });
  out.y = reduce_coefficients_mod(xs, p, static_cast<unsigned>(r));
  out.d = reduce_coefficients_mod(bp.eta_R(out.y) - out.y, p, static_cast<unsigned>(r));
  try {
    out.z = divide_by_monomial(out.d, v1s);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("beta: d(y) is not divisible by v1^s: ") + e.what());
  }
  out.tensor = bp.phi_inverse(out.z) / Rational(ulpow(p, static_cast<unsigned>(r)));
  out.coset = coset_reduce(out.tensor, p, deg);
  return out;
}

TensorCoset beta_representative(int t, int s, int r, unsigned p) { return beta_construction(t, s, r, p).coset; }

TensorCoset alpha1_alpha_t_representative(int t) {
  if (t < 1 || t % 2 == 0) throw std::invalid_argument("alpha1 alpha_t: t must be odd and positive");
  const BPContext& bp = BPContext::get(2);
  RPoly x = bp.gen(bp.vL(1)) * bp.gen(bp.vR(1), static_cast<unsigned>(t)) / Rational(4);
  return coset_reduce(x, 2, 2 * (t + 1));
}

}  // namespace fbeta
