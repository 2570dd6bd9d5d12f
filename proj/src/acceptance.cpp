#include "fbeta/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fbeta/beta.hpp"
#include "fbeta/chern.hpp"
#include "fbeta/cobar.hpp"
#include "fbeta/finvariant.hpp"
#include "fbeta/parse.hpp"

namespace fbeta {

namespace {

using Outcome = std::pair<bool, std::string>;

class Collector {
 public:
  void check(const std::string& name, const std::function<Outcome()>& body) {
    CheckResult r;
    r.name = name;
    try {
      auto [ok, detail] = body();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }
  void check(const std::string& name, const std::function<bool()>& body) {
    check(name, std::function<Outcome()>([&body] { return Outcome{body(), ""}; }));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

RPoly bp_poly(unsigned p, const std::string& s) { return parse_polynomial(s, BPContext::get(p).alphabet()); }

Outcome compare_poly(const RPoly& got, const RPoly& want) {
  if (got == want) return {true, got.str()};
  return {false, "computed " + got.str() + ", expected " + want.str()};
}

FSeries mod2(const CPoly& f, std::size_t n) { return reduce_mod_p(ModularForms::get(3).expansion(f, n), 2); }

// ---- suites ----

std::vector<CheckResult> suite_eta_r() {
  Collector c;
  for (unsigned p : {2U, 3U, 5U}) {
    const auto& bp = BPContext::get(p);
    std::string ps = std::to_string(p);
    c.check("eta_R(v1) = v1 + p t1 at p=" + ps, [&] {
      return compare_poly(bp.eta_R_generator(1), bp.gen(bp.v(1)) + bp.gen(bp.t(1)) * Rational(p));
    });
    c.check("eta_R(v2) = v2 + v1 t1^p - v1^p t1 mod p at p=" + ps, [&]() -> Outcome {
      RPoly want = bp.gen(bp.v(2)) + bp.gen(bp.v(1)) * bp.gen(bp.t(1), p) - bp.gen(bp.v(1), p) * bp.gen(bp.t(1));
      FPoly got = reduce_mod_p(bp.eta_R_generator(2), p);
      return {got == reduce_mod_p(want, p), got.str()};
    });
  }
  return c.take();
}

std::vector<CheckResult> suite_phi() {
  Collector c;
  const auto& bp = BPContext::get(2);
  c.check("phi(phi^{-1}(g)) = g on Gamma-monomials of degree <= 48", [&]() -> Outcome {
    std::size_t count = 0;
    for (int d = 0; d <= 48; d += 2) {
      for (const auto& m : bp.gamma_monomials(d)) {
        RPoly g = RPoly::monomial(bp.alphabet(), m, Rational(1));
        if (bp.phi(bp.phi_inverse(g)) != g) return {false, "fails on " + m.str(*bp.alphabet())};
        ++count;
      }
    }
    return {true, std::to_string(count) + " monomials"};
  });
  c.check("phi^{-1}(t1) = (1 (x) v1 - v1 (x) 1)/p", [&] {
    bool ok = true;
    for (unsigned p : {2U, 3U, 5U}) {
      const auto& b = BPContext::get(p);
      ok = ok && b.phi_inverse_t(1) == (b.gen(b.vR(1)) - b.gen(b.vL(1))) / Rational(p);
    }
    return ok;
  });
  return c.take();
}

std::vector<CheckResult> suite_lattice() {
  Collector c;
  c.check("(v1 (x) v1)/2 reduces to 0 in degree 4", [] { return coset_reduce(bp_poly(2, "1/2*vL1*vR1"), 2, 4).is_zero(); });
  c.check("(v1 (x) v1)/4 has order 2", [] {
    TensorCoset a = coset_reduce(bp_poly(2, "1/4*vL1*vR1"), 2, 4);
    return !a.is_zero() && a.order_exponent == 1;
  });
  c.check("(v1^2 (x) v1^2)/8 reduces to 0 in degree 8",
          [] { return coset_reduce(bp_poly(2, "1/8*vL1^2*vR1^2"), 2, 8).is_zero(); });
  return c.take();
}

std::vector<CheckResult> suite_beta() {
  Collector c;
  c.check("beta_{2/2} representative matches the reference coset", []() -> Outcome {
    TensorCoset b = beta_representative(2, 2, 1, 2);
    RPoly expected = bp_poly(2, "-1/8*vL1*vR1^3 + 5/16*vL1^2*vR1^2 - 3/8*vL1^3*vR1");
    TensorCoset diff = coset_reduce(b.representative - expected, 2, 8);
    return {diff.is_zero(), b.str()};
  });
  c.check("beta_{4/4} cocycle matches the reference z mod 2", []() -> Outcome {
    BetaData b = beta_construction(4, 4, 1, 2);
    RPoly expected =
        bp_poly(2, "v1*v2^2*t1 + v2^2*t1^2 + v1^3*v2*t1^2 + v1^5*t1^3 + v1*v2*t1^4 + v1^3*t1^5 + v1^2*t1^6 + t1^8");
    FPoly z = reduce_mod_p(b.z, 2);
    return {z == reduce_mod_p(expected, 2), z.str()};
  });
  return c.take();
}

std::vector<CheckResult> suite_level_one() {
  Collector c;
  const auto& o = Orientation::get(5, 1);
  const auto& A = o.forms().alphabet();
  c.check("a_5 = -8 g2", [&] { return compare_poly(o.log_coefficient(5), parse_polynomial("-8*g2", A)); });
  c.check("unnormalized a_11 = -2520 g2 g3",
          [&] { return compare_poly(o.unnormalized_log_coefficient(11), parse_polynomial("-2520*g2*g3", A)); });
  c.check("a_25 = 129761280 g2^3 g3^2 + 32440320 g3^4 + 3784704 g2^6", [&] {
    return compare_poly(o.log_coefficient(25),
                        parse_polynomial("129761280*g2^3*g3^2 + 32440320*g3^4 + 3784704*g2^6", A));
  });
  c.check("q^0(alpha(v1)) = -2/3", [&]() -> Outcome {
    Cyclo v = o.cusp_image(1);
    return {v == Cyclo(frac(-2, 3)), to_string(v)};
  });
  c.check("q^0(alpha(v2)) = -4900/3^10", [&]() -> Outcome {
    Cyclo v = o.cusp_image(2);
    return {v == Cyclo(Rational(-4900, 59049)), to_string(v)};
  });
  return c.take();
}

std::vector<CheckResult> suite_qexp(std::size_t precision) {
  Collector c;
  const auto& M = ModularForms::get(3);
  const std::size_t n = precision + 1;  // through q^precision
  const Cyclo u(1, 2);
  c.check("a1 = (1 + 2 zeta)(1 + 6 sum sigma_0^chi(n) q^n)", [&] {
    CSeries s = M.expansion(M.gen("a1"), n);
    if (s[0] != u) return false;
    for (std::size_t k = 1; k < n; ++k)
      if (s[k] != u * Cyclo(Rational(6 * sigma_chi(0, static_cast<long>(k))))) return false;
    return true;
  });
  c.check("a3 = (1 + 2 zeta)(-1/9 + sum sigma_2^chi(n) q^n)", [&] {
    CSeries s = M.expansion(M.gen("a3"), n);
    if (s[0] != u * Cyclo(frac(-1, 9))) return false;
    for (std::size_t k = 1; k < n; ++k)
      if (s[k] != u * Cyclo(Rational(sigma_chi(2, static_cast<long>(k))))) return false;
    return true;
  });
  c.check("a1 = 1 mod 2", [&] { return mod2(M.gen("a1"), n) == FSeries::constant(n, Residue(2, 1)); });
  c.check("a1(infinity) = 1 + 2 zeta, a3(infinity) = -(1 + 2 zeta)/9", [&] {
    return M.cusp_value(M.gen("a1")) == u && M.cusp_value(M.gen("a3")) == u * Cyclo(frac(-1, 9));
  });
  c.check("a3^3 (a1^3 - 27 a3) = q prod (1 - q^n)^24", [&] {
    RPoly d = parse_polynomial("a1^3*a3^3 - 27*a3^4", M.alphabet());
    return M.expansion(d, n) == to_cyclo(delta_product(n));
  });
  return c.take();
}

std::vector<CheckResult> suite_igusa(std::size_t precision) {
  Collector c;
  const auto& o = Orientation::get(2, 3);
  const auto& bp = o.bp();
  const auto& I = IgusaBasis::get();
  const std::size_t n = precision;
  FSeries one = FSeries::constant(n, Residue(2, 1));
  CPoly T1 = o.rho(bp.gen(bp.t(1)));
  CPoly T2 = o.rho(bp.gen(bp.t(2)));
  c.check("T1, T2 are divided congruences", [&] {
    return is_divided_congruence(T1, o.forms(), 2, n) && is_divided_congruence(T2, o.forms(), 2, n);
  });
  c.check("[3](T1) = T1 + 1", [&] { return mod2(diamond(T1, 3), n) == mod2(T1, n) + one; });
  c.check("[5](T2) = T2 + 1", [&] { return mod2(diamond(T2, 5), n) == mod2(T2, n) + one; });
  c.check("[9](T2) = T2", [&] { return mod2(diamond(T2, 9), n) == mod2(T2, n); });
  c.check("T^2 + T = 1 + a3", [&] {
    FSeries t = I.t_bar(n);
    return t * t + t == one + I.a3_bar(n);
  });
  c.check("T2^2 + T2 lies in F4[a3, T1]", [&]() -> Outcome {
    FSeries t2 = mod2(T2, n);
    auto e = I.express(t2 * t2 + t2, 8);
    if (!e) return {false, "not in the span"};
    return {true, e->str()};
  });
  return c.take();
}

std::vector<CheckResult> suite_sigma() {
  Collector c;
  c.check("sigma_0^chi(n/2) + sigma_0^chi(n) = sigma_2^chi(n) mod 2 for n <= " + std::to_string(kSigmaSweepLimit),
          []() -> Outcome {
            long bad = sigma_congruence_counterexample(kSigmaSweepLimit);
            return {bad == 0, bad == 0 ? "" : "fails at n = " + std::to_string(bad)};
          });
  return c.take();
}

std::vector<CheckResult> suite_pipeline(std::size_t precision) {
  Collector c;
  const auto& o = Orientation::get(2, 3);
  const auto& I = IgusaBasis::get();
  const std::vector<std::string> wanted{"beta_{2/2}",   "beta_{4/4}",     "beta_{8/8}",     "beta_{6/2}",
                                        "beta_3",       "alpha_1 alpha_3", "alpha_1 alpha_7"};
  std::map<std::string, Ext2Generator> gens;
  for (int n : {3, 4, 5})
    for (auto& g : ext2_catalog(n)) gens.emplace(g.name, g);
  for (const auto& name : wanted) {
    c.check("f(" + name + ") = closed form", [&]() -> Outcome {
      const Ext2Generator& g = gens.at(name);
      FClass f = f_invariant(g.representative(), o, precision);
      FSeries closed = I.expansion(g.closed_form, precision);
      bool series = equivalent(f, closed);
      bool coords = f.igusa && *f.igusa == canonical_igusa(closed, f.degree, f.ambiguity);
      return {series && coords, "closed form " + g.closed_form.str() + ", pipeline " + f.str()};
    });
  }
  return c.take();
}

std::vector<CheckResult> suite_laures(std::size_t precision) {
  Collector c;
  c.check("f(beta_1) at p=5 with alpha(v1) = E_4 matches (E4-1)/25 - ((E4-1)/5)^5/5", [&]() -> Outcome {
    const auto& o = Orientation::get(5, 1, OrientationKind::Eisenstein);
    FClass f = f_invariant(beta_representative(1, 1, 1, 5), o, precision);
    return {equivalent(f, laures_closed_form(5, precision)) && !f.is_zero(), f.str()};
  });
  return c.take();
}

std::vector<CheckResult> suite_kervaire(std::size_t precision) {
  Collector c;
  const auto& o = Orientation::get(2, 3);
  for (int n : {3, 4, 5}) {
    for (const auto& g : ext2_catalog(n)) {
      bool kervaire = g.kind == Ext2Generator::Kind::Beta && g.t == (1 << (n - 2)) && g.s == g.t;
      c.check("kervaire projection of " + g.name + " = " + (kervaire ? "1" : "0"), [&]() -> Outcome {
        int bit = kervaire_projection(f_invariant(g.representative(), o, precision));
        return {bit == (kervaire ? 1 : 0), std::to_string(bit)};
      });
    }
  }
  return c.take();
}

std::vector<CheckResult> suite_chern() {
  Collector c;
  const AlphabetPtr& S = symmetric_alphabet();
  const AlphabetPtr& T = two_sided_alphabet();
  auto two = [&T](const std::string& s) { return reduce_mod_p(parse_polynomial(s, T), 2); };
  c.check("Pi^(2) = (v1/2) c1", [&] { return compare_poly(pi_component(2).poly, parse_polynomial("1/2*v1*c1", S)); });
  c.check("Pi^(4) = (v1^2/4)(3c2 - c1^2)", [&] {
    return compare_poly(pi_component(4).poly, parse_polynomial("3/4*v1^2*c2 - 1/4*v1^2*c1^2", S));
  });
  c.check("Pi^(6) = (v1^3/8)(4c1^3 - 13c1c2 + 16c3) + (v2/2)(c1^3 - 3c1c2 + 3c3)", [&] {
    RPoly want = parse_polynomial("1/2*v1^3*c1^3 - 13/8*v1^3*c1*c2 + 2*v1^3*c3 + 1/2*v2*c1^3 - 3/2*v2*c1*c2 + "
                                  "3/2*v2*c3",
                                  S);
    return compare_poly(pi_component(6).poly, want);
  });
  c.check("dimension 4: c1^(0) c1^(1)", [&]() -> Outcome {
    FPoly f = kervaire_chern_polynomial(4);
    return {f == two("c1_0*c1_1"), f.str()};
  });
  c.check("dimension 8: c1^(0)(c1^(1)3 + c1^(1)c2^(1) + c3^(1)) + (c2^(0) + c1^(0)2)(c2^(1) + c1^(1)2)",
          [&]() -> Outcome {
            FPoly f = kervaire_chern_polynomial(8);
            FPoly want = two("c1_0*c1_1^3 + c1_0*c1_1*c2_1 + c1_0*c3_1 + c2_0*c2_1 + c2_0*c1_1^2 + c1_0^2*c2_1 + "
                             "c1_0^2*c1_1^2");
            return {f == want, f.str()};
          });
  c.check("dimension 8: Pi^(4) (x) Pi^(4) part is (3c2 - c1^2)(3c2' - c1'^2) = (c2 + c1^2)(c2' + c1'^2) mod 2",
          [&]() -> Outcome {
            KervaireReduction r = kervaire_reduction(8);
            FPoly got = r.contributions.at(4);
            bool ok = got == two("9*c2_0*c2_1 - 3*c2_0*c1_1^2 - 3*c1_0^2*c2_1 + c1_0^2*c1_1^2") &&
                      got == two("c2_0*c2_1 + c2_0*c1_1^2 + c1_0^2*c2_1 + c1_0^2*c1_1^2");
            return {ok, got.str()};
          });
  return c.take();
}

// ---- randomized properties ----

RPoly random_poly(std::mt19937_64& rng) {
  const auto& bp = BPContext::get(2);
  std::uniform_int_distribution<int> e(0, 2), num(-6, 6), den(1, 4), nterms(0, 4);
  std::vector<std::size_t> gens{bp.v(1), bp.v(2), bp.t(1), bp.vL(1), bp.vR(2)};
  std::vector<RPoly::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    for (auto g : gens) m = m * Monomial::generator(*bp.alphabet(), g, static_cast<unsigned>(e(rng)));
    terms.emplace_back(m, frac(num(rng), den(rng)));
  }
  return RPoly::from_terms(bp.alphabet(), terms);
}

CobarElement random_cobar(std::mt19937_64& rng, std::size_t length) {
  const auto& bp = BPContext::get(2);
  std::uniform_int_distribution<int> e(0, 2), num(-4, 4), den(1, 5), nterms(1, 3);
  CobarElement x(length);
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    TensorWord w;
    for (std::size_t i = 0; i < length; ++i)
      w.push_back(Monomial::generator(*bp.alphabet(), bp.v(1), static_cast<unsigned>(e(rng))) *
                  Monomial::generator(*bp.alphabet(), bp.v(2), static_cast<unsigned>(e(rng) / 2)));
    x.add(w, frac(num(rng), den(rng)));
  }
  return x;
}

std::vector<CheckResult> suite_properties(std::uint64_t seed) {
  Collector c;
  const int N = kPropertyCases;
  std::string cases = std::to_string(N) + " cases, seed " + std::to_string(seed);

  c.check("ring axioms", [&]() -> Outcome {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < N; ++i) {
      RPoly a = random_poly(rng), b = random_poly(rng), x = random_poly(rng);
      if ((a + b) + x != a + (b + x) || a + b != b + a || a * b != b * a || (a * b) * x != a * (b * x) ||
          a * (b + x) != a * b + a * x || a - a != RPoly(a.alphabet()))
        return {false, "polynomials: case " + std::to_string(i)};
      Cyclo p(frac(d(rng), 1 + std::abs(d(rng))), frac(d(rng), 1 + std::abs(d(rng))));
      Cyclo q(frac(d(rng), 1 + std::abs(d(rng))), Rational(d(rng)));
      Cyclo r(Rational(d(rng)), frac(d(rng), 3));
      if ((p * q) * r != p * (q * r) || p * (q + r) != p * q + p * r || p * q != q * p)
        return {false, "Q(zeta): case " + std::to_string(i)};
      if (!p.is_zero() && p * p.inverse() != Cyclo(1)) return {false, "Q(zeta) inverse: case " + std::to_string(i)};
      Residue f(2, d(rng), d(rng)), g(2, d(rng), d(rng)), h(2, d(rng), d(rng));
      if ((f * g) * h != f * (g * h) || f * (g + h) != f * g + f * h || f + f != Residue(2, 0))
        return {false, "F4: case " + std::to_string(i)};
    }
    return {true, cases};
  });

  c.check("series reversion round trips", [&]() -> Outcome {
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<int> d(-7, 7), len(3, 12);
    for (int i = 0; i < N; ++i) {
      std::size_t n = static_cast<std::size_t>(len(rng));
      RSeries f(n);
      f[1] = 1;
      for (std::size_t k = 2; k < n; ++k) f[k] = frac(d(rng), 1 + std::abs(d(rng)));
      RSeries g = f.reverse();
      if (f.compose(g) != RSeries::variable(n) || g.compose(f) != RSeries::variable(n) || g.reverse() != f)
        return {false, "case " + std::to_string(i) + ": " + f.str()};
    }
    return {true, cases};
  });

  c.check("coset reduction is idempotent and ignores integral elements", [&]() -> Outcome {
    std::mt19937_64 rng(seed + 2);
    const auto& bp = BPContext::get(2);
    std::vector<Monomial> tensors, gammas = bp.gamma_monomials(8);
    for (const auto& m : bp.tensor_monomials(8))
      if (!bp.is_pure_tensor(m)) tensors.push_back(m);
    std::uniform_int_distribution<std::size_t> pick_t(0, tensors.size() - 1), pick_g(0, gammas.size() - 1);
    std::uniform_int_distribution<int> num(-40, 40), shift(0, 5), nterms(1, 4), mult(-3, 3);
    for (int i = 0; i < N; ++i) {
      std::vector<RPoly::Term> terms;
      for (int k = nterms(rng); k > 0; --k) terms.emplace_back(tensors[pick_t(rng)], frac(num(rng), 1L << shift(rng)));
      RPoly x = RPoly::from_terms(bp.alphabet(), terms);
      TensorCoset a = coset_reduce(x, 2, 8);
      if (coset_reduce(a.representative, 2, 8).representative != a.representative)
        return {false, "not idempotent on " + x.str()};
      RPoly y = x + bp.phi_inverse_monomial(gammas[pick_g(rng)]) * Rational(mult(rng));
      if (coset_reduce(y, 2, 8).representative != a.representative)
        return {false, "integral shift changed the coset of " + x.str()};
    }
    return {true, cases};
  });

  c.check("d o d = 0 in the cobar complex", [&]() -> Outcome {
    std::mt19937_64 rng(seed + 3);
    std::uniform_int_distribution<int> len(1, 3);
    for (int i = 0; i < N; ++i) {
      CobarElement x = random_cobar(rng, static_cast<std::size_t>(len(rng)));
      if (!differential(differential(x)).is_zero()) return {false, "case " + std::to_string(i)};
      if (!quotient_differential(quotient_differential(project_mod_sigma(x))).is_zero())
        return {false, "quotient, case " + std::to_string(i)};
    }
    return {true, cases};
  });

  c.check("diamond operators compose", [&]() -> Outcome {
    std::mt19937_64 rng(seed + 4);
    const auto& M = ModularForms::get(3);
    std::uniform_int_distribution<int> e(0, 3), num(-9, 9), nterms(1, 4), unit(-20, 20);
    for (int i = 0; i < N; ++i) {
      std::vector<CPoly::Term> terms;
      for (int k = nterms(rng); k > 0; --k) {
        Monomial m = Monomial::generator(*M.alphabet(), 0, static_cast<unsigned>(e(rng))) *
                     Monomial::generator(*M.alphabet(), 1, static_cast<unsigned>(e(rng)));
        terms.emplace_back(m, Cyclo(frac(num(rng), 1 + std::abs(num(rng))), Rational(num(rng))));
      }
      CPoly f = CPoly::from_terms(M.alphabet(), terms);
      Rational a = 2 * unit(rng) + 1, b = 2 * unit(rng) + 1;
      if (diamond(diamond(f, a), b) != diamond(f, a * b) || diamond(f, 1) != f)
        return {false, "case " + std::to_string(i)};
    }
    return {true, cases};
  });
  return c.take();
}

struct CriterionSpec {
  const char* title;
  double budget;
  std::vector<std::string> suites;
};

const std::map<int, CriterionSpec>& criteria() {
  static const std::map<int, CriterionSpec> table{
      {1, {"eta_R on v1, v2 at p = 2, 3, 5", 1, {"eta-r"}}},
      {2, {"phi o phi^{-1} = id through degree 48, phi^{-1}(t1)", 30, {"phi"}}},
      {3, {"lattice memberships in degrees 4 and 8", 10, {"lattice"}}},
      {4, {"beta_{2/2} representative and beta_{4/4} cocycle", 60, {"beta"}}},
      {5, {"level-1 formal group at p = 5", 120, {"level-one"}}},
      {6, {"level-3 q-expansions through q^200", 600, {"qexp"}}},
      {7, {"Igusa tower and divisor-sum congruence", 120, {"igusa", "sigma"}}},
      {8, {"pipeline equals closed forms at p = 2", 300, {"pipeline"}}},
      {9, {"Laures form at p = 5", 120, {"laures"}}},
      {10, {"Kervaire projection on the Ext^2 catalog", 600, {"kervaire"}}},
      {11, {"Chern number criteria in dimensions 4 and 8", 60, {"chern"}}},
      {12, {"randomized property suites", 600, {"properties"}}},
  };
  return table;
}

}  // namespace

bool CriterionReport::passed() const {
  if (checks.empty() || !within_budget()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> verify_suites() {
  return {"eta-r",    "phi",    "lattice",  "beta",     "level-one", "qexp",      "igusa",
          "sigma",    "pipeline", "laures", "kervaire", "chern",     "properties"};
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed, std::size_t precision) {
  if (name == "eta-r") return suite_eta_r();
  if (name == "phi") return suite_phi();
  if (name == "lattice") return suite_lattice();
  if (name == "beta") return suite_beta();
  if (name == "level-one") return suite_level_one();
  if (name == "qexp") return suite_qexp(precision);
  if (name == "igusa") return suite_igusa(precision);
  if (name == "sigma") return suite_sigma();
  if (name == "pipeline") return suite_pipeline(precision);
  if (name == "laures") return suite_laures(precision);
  if (name == "kervaire") return suite_kervaire(precision);
  if (name == "chern") return suite_chern();
  if (name == "properties") return suite_properties(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

CriterionReport run_criterion(int id, std::uint64_t seed) {
  auto it = criteria().find(id);
  if (it == criteria().end()) throw std::invalid_argument("no criterion " + std::to_string(id));
  CriterionReport r;
  r.id = id;
  r.title = it->second.title;
  r.budget_seconds = it->second.budget;
  auto start = std::chrono::steady_clock::now();
  for (const auto& s : it->second.suites) {
    auto part = run_suite(s, seed, kAcceptancePrecision);
    r.checks.insert(r.checks.end(), part.begin(), part.end());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace fbeta
