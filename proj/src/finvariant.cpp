#include "fbeta/finvariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fbeta {

namespace {

Cyclo fractional_part(const Cyclo& c, unsigned p) {
  return {p_fractional_part(c.a(), p), p_fractional_part(c.b(), p)};
}

// lambda with b + A lambda p-integral, where A is rows x cols. Column operations are
// over K and tracked in C (A_now = A C); row operations stay unimodular over W, so
// the final system decouples into pivot rows (fixed by lambda) and leftover rows.
struct Correction {
  std::vector<Cyclo> lambda;
  // Coefficient vectors of a W-basis of {lambda : A lambda integral}.
  std::vector<std::vector<Cyclo>> lattice;
};

Correction integrality_correction(std::vector<std::vector<Cyclo>> A, std::vector<Cyclo> b, unsigned p) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::vector<Cyclo>> C(cols, std::vector<Cyclo>(cols));
  for (std::size_t j = 0; j < cols; ++j) C[j][j] = 1;
  std::vector<bool> used(rows, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)

  auto col_scale = [&](std::size_t j, const Cyclo& s) {
    for (std::size_t i = 0; i < rows; ++i)
      if (!A[i][j].is_zero()) A[i][j] *= s;
    for (std::size_t i = 0; i < cols; ++i)
      if (!C[i][j].is_zero()) C[i][j] *= s;
  };
  auto col_axpy = [&](std::size_t l, const Cyclo& s, std::size_t j) {  // col_l -= s col_j
    for (std::size_t i = 0; i < rows; ++i)
      if (!A[i][j].is_zero()) A[i][l] -= s * A[i][j];
    for (std::size_t i = 0; i < cols; ++i)
      if (!C[i][j].is_zero()) C[i][l] -= s * C[i][j];
  };

  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t best = rows;
    long best_v = kInfiniteValuation;
    for (std::size_t i = 0; i < rows; ++i) {
      if (used[i] || A[i][j].is_zero()) continue;
      long v = A[i][j].valuation(p);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == rows) continue;  // column vanishes to this precision
    const std::size_t r = best;
    col_scale(j, A[r][j].inverse());
    for (std::size_t l = 0; l < cols; ++l) {
      if (l == j || A[r][l].is_zero()) continue;
      Cyclo s = A[r][l];
      col_axpy(l, s, j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][j].is_zero()) continue;
      Cyclo s = A[i][j];  // integral by the choice of pivot
      for (std::size_t l = 0; l < cols; ++l)
        if (!A[r][l].is_zero()) A[i][l] -= s * A[r][l];
      b[i] -= s * b[r];
    }
    used[r] = true;
    pivots.emplace_back(r, j);
  }
  for (std::size_t i = 0; i < rows; ++i)
    if (!used[i] && !b[i].is_integral(p))
      throw std::domain_error("f-invariant: no constant plus top-weight form makes the q^" + std::to_string(i) +
                              " coefficient integral (" + b[i].str() + ")");
  std::vector<Cyclo> mu(cols);
  for (auto [r, j] : pivots) mu[j] = -fractional_part(b[r], p);
  Correction out;
  out.lambda.assign(cols, Cyclo());
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!C[i][j].is_zero() && !mu[j].is_zero()) out.lambda[i] += C[i][j] * mu[j];
  for (auto [r, j] : pivots) {
    std::vector<Cyclo> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = C[i][j];
    out.lattice.push_back(std::move(v));
  }
  return out;
}

FSeries zero_series(unsigned p, std::size_t n) { return FSeries::constant(n, Residue(p, 0)); }

Residue one_mod(unsigned p) { return Residue(p, 1); }

}  // namespace

bool FClass::is_zero() const { return equivalent(*this, zero_series(prime, precision)); }

std::string FClass::str() const {
  if (igusa) return igusa->str();
  return reduction.truncated(std::min<std::size_t>(reduction.precision(), 12)).str("q");
}

FClass f_invariant(const TensorCoset& c, const Orientation& o, std::size_t precision) {
  if (c.prime != o.prime())
    throw std::invalid_argument("f_invariant: class at p = " + std::to_string(c.prime) + " but orientation at p = " +
                                std::to_string(o.prime()));
  if (c.degree % 2 != 0) throw std::invalid_argument("f_invariant: odd degree");
  const ModularForms& M = o.forms();
  const unsigned p = o.prime();
  FClass f;
  f.prime = p;
  f.level = o.level();
  f.degree = c.degree;
  f.precision = precision;

  std::vector<CPoly> basis{CPoly(M.alphabet(), Cyclo(1))};
  for (const auto& m : M.monomials(c.degree)) basis.push_back(CPoly::monomial(M.alphabet(), m, Cyclo(1)));
  std::vector<CSeries> basis_q;
  for (const auto& g : basis) {
    basis_q.push_back(M.expansion(g, precision));
  }

  CPoly F(M.alphabet());
  if (c.order_exponent > 0)
    F = o.apply_tensor(c.representative) * Cyclo(Rational(ipow(Integer(p), c.order_exponent)));
  CSeries fq = M.expansion(F, precision);
  std::vector<std::vector<Cyclo>> A(precision, std::vector<Cyclo>(basis.size()));
  std::vector<Cyclo> b(precision);
  for (std::size_t i = 0; i < precision; ++i) {
    b[i] = fq[i];
    for (std::size_t j = 0; j < basis.size(); ++j) A[i][j] = basis_q[j][i];
  }
  auto corr = integrality_correction(std::move(A), std::move(b), p);
  CPoly g = F;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!corr.lambda[j].is_zero()) g += basis[j] * corr.lambda[j];
  f.divided = g;
  f.reduction = reduce_mod_p(M.expansion(g, precision), p);
  for (const auto& v : corr.lattice) {
    CSeries h(precision);
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!v[j].is_zero()) h += basis_q[j] * v[j];
    f.ambiguity.push_back(reduce_mod_p(h, p));
  }
  if (f.level == 3) f.igusa = canonical_igusa(f.reduction, f.degree, f.ambiguity);
  return f;
}

bool equivalent(const FClass& f, const FSeries& x) {
  std::size_t n = std::min(f.reduction.precision(), x.precision());
  std::vector<FSeries> cols;
  for (const auto& a : f.ambiguity) cols.push_back(a.truncated(n));
  FSeries diff = f.reduction.truncated(n) - x.truncated(n);
  if (diff.is_zero()) return true;
  return span_coordinates(cols, diff).has_value();
}

bool equivalent(const FClass& f, const FClass& g) {
  if (f.prime != g.prime || f.level != g.level || f.degree != g.degree) return false;
  return equivalent(f, g.reduction);
}

FPoly canonical_igusa(const FSeries& x, int degree, const std::vector<FSeries>& ambiguity) {
  const int k = degree / 2;
  const std::size_t N = x.precision();
  const unsigned top = static_cast<unsigned>(k + 4);
  const IgusaBasis& I = IgusaBasis::get();
  FSeries t = I.t_bar(N), a = I.a3_bar(N);
  std::vector<FSeries> igusa_cols, cols;
  std::vector<Monomial> monos;
  FSeries ai = FSeries::constant(N, Residue(2, 1));
  for (unsigned i = 0; i <= top; ++i) {
    for (unsigned j = 0; j <= 1; ++j) {
      igusa_cols.push_back(j == 0 ? ai : ai * t);
      monos.push_back(Monomial::from_exponents(*I.alphabet(), {j, i}));
    }
    ai *= a;
  }
  std::vector<FSeries> amb;
  for (const auto& s : ambiguity) amb.push_back(s.truncated(N));
  cols = igusa_cols;
  cols.insert(cols.end(), amb.begin(), amb.end());
  if (span_rank(igusa_cols) < igusa_cols.size())
    throw std::domain_error("Igusa basis up to a3^" + std::to_string(top) + " is degenerate at precision " +
                            std::to_string(N));
  auto coords = span_coordinates(cols, x);
  if (!coords) throw std::domain_error("reduction is not in the Igusa span modulo the ambiguity");
  const std::size_t m = igusa_cols.size();
  std::vector<Residue> c(coords->begin(), coords->begin() + static_cast<long>(m));

  // S: Igusa coordinates of the ambiguity elements that lie in the Igusa span, in
  // reduced echelon form with pivots on the lowest basis elements.
  std::vector<std::vector<Residue>> S;
  for (const auto& v : span_kernel(cols)) S.emplace_back(v.begin(), v.begin() + static_cast<long>(m));
  std::vector<std::size_t> pivot_of;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < S.size(); ++col) {
    std::size_t r = row;
    while (r < S.size() && S[r][col].is_zero()) ++r;
    if (r == S.size()) continue;
    std::swap(S[r], S[row]);
    Residue inv = S[row][col].inverse();
    for (auto& e : S[row]) e *= inv;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (i == row || S[i][col].is_zero()) continue;
      Residue f = S[i][col];
      for (std::size_t j = 0; j < m; ++j) S[i][j] -= f * S[row][j];
    }
    pivot_of.push_back(col);
    ++row;
  }
  for (std::size_t i = 0; i < pivot_of.size(); ++i) {
    Residue f = c[pivot_of[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) c[j] -= f * S[i][j];
  }
  // Declared ambiguity: 1 and a3^j with 3j <= k must be among the pivots.
  for (std::size_t i = 0; i < m; ++i) {
    const Monomial& mo = monos[i];
    if (mo.e[0] != 0 || 3 * static_cast<int>(mo.e[1]) > k) continue;
    if (std::find(pivot_of.begin(), pivot_of.end(), i) == pivot_of.end())
      throw std::logic_error("ambiguity does not contain a3^" + std::to_string(mo.e[1]));
  }
  std::vector<FPoly::Term> terms;
  for (std::size_t i = 0; i < m; ++i)
    if (!c[i].is_zero()) terms.emplace_back(monos[i], c[i]);
  return FPoly::from_terms(I.alphabet(), terms);
}

FSeries beta_t_closed_form(int t, const Orientation& o, std::size_t precision) {
  if (t < 1) throw std::invalid_argument("beta_t: t must be positive");
  const unsigned p = o.prime();
  const ModularForms& M = o.forms();
  CPoly v1 = to_cyclo(o.image(1));
  CPoly T = (v1 - CPoly(M.alphabet(), o.cusp_image(1))) * Cyclo(frac(1, static_cast<long>(p)));
  FSeries Tq = reduce_mod_p(M.expansion(T, precision), p);
  Residue b = Residue::from_cyclo(o.cusp_image(2), p);
  FSeries B = FSeries::constant(precision, b);
  FSeries inner = Tq.pow(p) - Tq + B;
  return B.pow(static_cast<unsigned>(t)) - inner.pow(static_cast<unsigned>(t));
}

FSeries laures_closed_form(unsigned p, std::size_t precision) {
  RSeries E;
  if (p == 5) {
    E = eisenstein_e4(precision);
  } else if (p == 7) {
    E = eisenstein_e6(precision);
  } else {
    throw std::invalid_argument("laures_closed_form: p must be 5 or 7");
  }
  RSeries X = (E - RSeries::constant(precision, Rational(1))) * frac(1, static_cast<long>(p));
  return reduce_mod_p(X - X.pow(p), p);
}

// ---------------------------------------------------------------------------

FPoly closed_form_alpha1_alpha_t() { return FPoly::generator(IgusaBasis::get().alphabet(), "T"); }

FPoly closed_form_beta(int s, int i) {
  if (s < 1 || s % 2 == 0 || i < 0) throw std::invalid_argument("closed_form_beta: s must be odd and i >= 0");
  const AlphabetPtr& A = IgusaBasis::get().alphabet();
  auto a3 = [&](unsigned k) { return FPoly(A, one_mod(2)) * FPoly::generator(A, "a3", k); };
  FPoly one(A, one_mod(2));
  if (i == 0) return one + a3(static_cast<unsigned>(s));
  if (i == 1) return one + a3(static_cast<unsigned>(2 * s));
  return (a3(1U << i) + a3(3U << (i - 2))).pow(static_cast<unsigned>(s));
}

TensorCoset Ext2Generator::representative() const {
  if (kind == Kind::Alpha1AlphaT) return alpha1_alpha_t_representative(t);
  return beta_representative(t, s, 1, 2);
}

std::vector<Ext2Generator> ext2_catalog(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("ext2_catalog: n must be in 2..10");
  const int deg = 1 << n;
  std::vector<Ext2Generator> out;
  {
    Ext2Generator g;
    g.kind = Ext2Generator::Kind::Alpha1AlphaT;
    g.t = (1 << (n - 1)) - 1;
    g.name = "alpha_1 alpha_" + std::to_string(g.t);
    g.closed_form = closed_form_alpha1_alpha_t();
    g.degree = deg;
    out.push_back(g);
  }
  for (int i = n - 1; i >= 0; --i) {
    int q = deg >> (i + 1);  // 3s - 1
    if ((deg % (1 << (i + 1))) != 0 || (q + 1) % 3 != 0) continue;
    int s = (q + 1) / 3;
    if (s % 2 == 0 || (s == 1 && i == 0)) continue;
    Ext2Generator g;
    g.kind = Ext2Generator::Kind::Beta;
    g.t = s << i;
    g.s = 1 << i;
    g.name = g.s == 1 ? "beta_" + std::to_string(g.t) : "beta_{" + std::to_string(g.t) + "/" + std::to_string(g.s) + "}";
    g.closed_form = closed_form_beta(s, i);
    g.degree = deg;
    if (beta_degree(2, g.t, g.s) != deg) throw std::logic_error("ext2_catalog: degree mismatch for " + g.name);
    out.push_back(g);
  }
  return out;
}

int kervaire_projection(const FClass& f) {
  if (!f.igusa) throw std::invalid_argument("kervaire_projection needs a level-3 class at p = 2");
  int n = 0;
  while ((1 << n) < f.degree) ++n;
  if ((1 << n) != f.degree || n < 3) throw std::invalid_argument("kervaire_projection: degree must be 2^n, n >= 3");
  const AlphabetPtr& A = IgusaBasis::get().alphabet();
  Monomial m = Monomial::from_exponents(*A, {0U, 1U << (n - 2)});
  Residue c = f.igusa->coefficient(m);
  if (c.is_zero()) return 0;
  if (c == one_mod(2)) return 1;
  // Classes from Ext are defined over F_2; another F_4 value means a broken pipeline.
  throw std::domain_error("kervaire_projection: coefficient " + c.str() + " is not in F_2");
}

}  // namespace fbeta
