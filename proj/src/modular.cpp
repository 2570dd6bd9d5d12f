#include "fbeta/modular.hpp"

#include <stdexcept>
#include <tuple>

namespace fbeta {

int chi3(long n) {
  long r = ((n % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

Integer sigma_chi(unsigned k, long n) {
  if (n <= 0) throw std::invalid_argument("sigma_chi: n must be positive");
  Integer s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int c = chi3(d);
    if (c != 0) s += c * ipow(Integer(d), k);
  }
  return s;
}

std::vector<Integer> sigma_chi_table(unsigned k, std::size_t count) {
  std::vector<Integer> s(count, 0);
  for (std::size_t d = 1; d < count; ++d) {
    int c = chi3(static_cast<long>(d));
    if (c == 0) continue;
    Integer dk = c * ipow(Integer(static_cast<unsigned long>(d)), k);
    for (std::size_t m = d; m < count; m += d) s[m] += dk;
  }
  return s;
}

std::vector<Integer> sigma_table(unsigned k, std::size_t count) {
  std::vector<Integer> s(count, 0);
  for (std::size_t d = 1; d < count; ++d) {
    Integer dk = ipow(Integer(static_cast<unsigned long>(d)), k);
    for (std::size_t m = d; m < count; m += d) s[m] += dk;
  }
  return s;
}

long sigma_congruence_counterexample(long limit) {
  auto s0 = sigma_chi_table(0, static_cast<std::size_t>(limit) + 1);
  auto s2 = sigma_chi_table(2, static_cast<std::size_t>(limit) + 1);
  for (long n = 1; n <= limit; ++n) {
    Integer lhs = s0[n] + (n % 2 == 0 ? s0[n / 2] : Integer(0)) - s2[n];
    if (mpz_odd_p(lhs.get_mpz_t())) return n;
  }
  return 0;
}

namespace {

RSeries eisenstein(std::size_t precision, unsigned k, long factor) {
  RSeries e(precision);
  if (precision == 0) return e;
  e[0] = 1;
  auto s = sigma_table(k, precision);
  for (std::size_t n = 1; n < precision; ++n) e[n] = Rational(Integer(factor * s[n]));
  return e;
}

}  // namespace

RSeries eisenstein_e4(std::size_t precision) { return eisenstein(precision, 3, 240); }
RSeries eisenstein_e6(std::size_t precision) { return eisenstein(precision, 5, -504); }

RSeries delta_product(std::size_t precision) {
  RSeries prod = RSeries::constant(precision, Rational(1));
  for (std::size_t n = 1; n < precision; ++n) {
    RSeries f = RSeries::constant(precision, Rational(1));
    f[n] = -1;
    prod *= f.pow(24);
  }
  return prod.shift_up(1);
}

RPoly WeierstrassModel::discriminant() const {
  RPoly b2 = a1 * a1 + a2 * Rational(4);
  RPoly b4 = a4 * Rational(2) + a1 * a3;
  RPoly b6 = a3 * a3 + a6 * Rational(4);
  RPoly b8 = a1 * a1 * a6 + a2 * a6 * Rational(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(b2 * b2 * b8) - b4.pow(3) * Rational(8) - b6 * b6 * Rational(27) + b2 * b4 * b6 * Rational(9);
}

std::vector<RPoly> invariant_differential(const WeierstrassModel& E, std::size_t count) {
  if (count == 0) return {};
  const AlphabetPtr& A = E.alphabet;
  std::size_t n = count;  // omega/dz to precision n - 1 gives c_1 .. c_{n-1}
  auto mono = [&](const RPoly& c, std::size_t k) {
    PolySeries s(n);
    if (k < n) s[k] = c;
    return s;
  };
  PolySeries one = PolySeries::constant(n, RPoly(A, 1));
  // w = z^3 u with u = 1 + a1 z u + a2 z^2 u + a3 z^3 u^2 + a4 z^4 u^2 + a6 z^6 u^3.
  PolySeries u = one;
  PolySeries lin = mono(E.a1, 1) + mono(E.a2, 2);
  PolySeries quad = mono(E.a3, 3) + mono(E.a4, 4);
  PolySeries cub = mono(E.a6, 6);
  for (std::size_t it = 0; it < n; ++it) {
    PolySeries u2 = u * u;
    PolySeries next = one + lin * u + quad * u2 + cub * u2 * u;
    if (next == u) break;
    u = std::move(next);
  }
  // X = z^2 x = 1/u; omega/dz = (z X' - 2X) / (-2X + a1 z X + a3 z^3).
  PolySeries X = u.inverse();
  PolySeries num(n);
  for (std::size_t k = 0; k < n; ++k) num[k] = X[k] * Rational(static_cast<long>(k) - 2);
  PolySeries den = X * RPoly(A, -2) + mono(E.a1, 1) * X + mono(E.a3, 3);
  PolySeries omega = num * den.inverse();
  std::vector<RPoly> c(count, RPoly(A, 0));
  for (std::size_t k = 1; k < count; ++k) c[k] = omega[k - 1];
  return c;
}

// ---------------------------------------------------------------------------

const ModularForms& ModularForms::get(int level) {
  static const ModularForms level1(1);
  static const ModularForms level3(3);
  if (level == 1) return level1;
  if (level == 3) return level3;
  throw std::invalid_argument("unsupported level " + std::to_string(level) + " (expected 1 or 3)");
}

ModularForms::ModularForms(int level) : level_(level) {
  if (level == 3) {
    alpha_ = make_alphabet({"a1", "a3"}, {2, 6});
    model_ = {alpha_, RPoly::generator(alpha_, "a1"), RPoly(alpha_, 0), RPoly::generator(alpha_, "a3"),
              RPoly(alpha_, 0), RPoly(alpha_, 0)};
    Cyclo u(1, 2);
    scalar_ = {u, u};
    cusp_ = {u, u * Cyclo(frac(-1, 9))};
  } else if (level == 1) {
    alpha_ = make_alphabet({"g2", "g3"}, {8, 12});
    model_ = {alpha_, RPoly(alpha_, 0), RPoly(alpha_, 0), RPoly(alpha_, 0),
              RPoly::generator(alpha_, "g2") * frac(-1, 4), RPoly::generator(alpha_, "g3") * frac(-1, 4)};
    scalar_ = {Cyclo(1), Cyclo(1)};
    cusp_ = {Cyclo(frac(1, 12)), Cyclo(frac(-1, 216))};
  } else {
    throw std::invalid_argument("unsupported level " + std::to_string(level));
  }
}

RSeries ModularForms::generator_series(std::size_t g, std::size_t precision) const {
  RSeries s(precision);
  if (precision == 0) return s;
  if (level_ == 3) {
    auto sig = sigma_chi_table(g == 0 ? 0 : 2, precision);
    if (g == 0) {
      s[0] = 1;
      for (std::size_t n = 1; n < precision; ++n) s[n] = Rational(Integer(6 * sig[n]));
    } else {
      s[0] = frac(-1, 9);
      for (std::size_t n = 1; n < precision; ++n) s[n] = Rational(sig[n]);
    }
    return s;
  }
  if (g == 0) return eisenstein_e4(precision) * frac(1, 12);
  return eisenstein_e6(precision) * frac(-1, 216);
}

const RSeries& ModularForms::monomial_series(const Monomial& m, std::size_t precision) const {
  std::lock_guard lock(mu_);
  auto& table = cache_[precision];
  auto it = table.find(m);
  if (it != table.end()) return it->second;
  RSeries s;
  if (m.is_one()) {
    s = RSeries::constant(precision, Rational(1));
  } else {
    // Peel one factor off the highest generator present.
    std::size_t g = alpha_->size();
    while (g-- > 0)
      if (m.e[g]) break;
    Monomial rest = m;
    rest.set(*alpha_, g, m.e[g] - 1);
    if (rest.is_one()) {
      s = generator_series(g, precision);
    } else {
      s = monomial_series(rest, precision) * monomial_series(Monomial::generator(*alpha_, g), precision);
    }
  }
  return table.emplace(m, std::move(s)).first->second;
}

Cyclo ModularForms::cusp_value(const CPoly& f) const {
  return evaluate(f, cusp_, [](const Cyclo& c) { return c; });
}

CSeries ModularForms::expansion(const CPoly& f, std::size_t precision) const {
  RSeries ra(precision), rb(precision);
  for (const auto& [m, c] : f.terms()) {
    Cyclo s = c;
    for (std::size_t g = 0; g < alpha_->size(); ++g)
      for (unsigned k = 0; k < m.e[g]; ++k) s *= scalar_[g];
    const RSeries& r = monomial_series(m, precision);
    if (sgn(s.a()) != 0) ra += r * s.a();
    if (sgn(s.b()) != 0) rb += r * s.b();
  }
  CSeries out(precision);
  for (std::size_t i = 0; i < precision; ++i) out[i] = Cyclo(ra[i], rb[i]);
  return out;
}

std::vector<Monomial> ModularForms::monomials(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  int d0 = alpha_->degree(0), d1 = alpha_->degree(1);
  for (int j = 0; j * d1 <= degree; ++j) {
    int rest = degree - j * d1;
    if (rest % d0 != 0) continue;
    out.push_back(Monomial::from_exponents(*alpha_, {static_cast<unsigned>(rest / d0), static_cast<unsigned>(j)}));
  }
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) { return compare(x, y) < 0; });
  return out;
}

// ---------------------------------------------------------------------------

const Orientation& Orientation::get(unsigned p, int level, OrientationKind kind) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, int, int>, std::unique_ptr<Orientation>> table;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(p, level, static_cast<int>(kind));
  auto it = table.find(key);
  if (it == table.end()) it = table.emplace(key, std::make_unique<Orientation>(p, level, kind)).first;
  return *it->second;
}

Orientation::Orientation(unsigned p, int level, OrientationKind kind) : p_(p), kind_(kind) {
  if (!is_prime(p)) throw std::invalid_argument("orientation: " + std::to_string(p) + " is not prime");
  if (level == 3 && p != 2) throw std::invalid_argument("level 3 orientation requires p = 2");
  if (level == 1 && p < 5) throw std::invalid_argument("level 1 orientation requires p >= 5");
  if (kind == OrientationKind::Eisenstein && (level != 1 || (p != 5 && p != 7)))
    throw std::invalid_argument("Eisenstein orientation is available at level 1 for p = 5, 7");
  forms_ = &ModularForms::get(level);
  bp_ = &BPContext::get(p);
  images_.emplace_back(forms_->alphabet(), 0);
  cusp_images_.emplace_back(0);
}

void Orientation::ensure_log(std::size_t count) const {
  std::lock_guard lock(mu_);
  if (log_.size() >= count) return;
  auto c = invariant_differential(forms_->model(), count);
  if (level() == 1) {
    Rational scale = 1;
    for (std::size_t n = 1; n < count; ++n) {
      c[n] *= scale;
      scale *= 2;
    }
  }
  log_ = std::move(c);
}

RPoly Orientation::log_coefficient(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("log coefficients start at n = 1");
  ensure_log(n + 1);
  std::lock_guard lock(mu_);
  return log_[n];
}

RPoly Orientation::unnormalized_log_coefficient(std::size_t n) const {
  return log_coefficient(n) * Rational(-2);
}

void Orientation::ensure_images(int n) const {
  std::lock_guard lock(mu_);
  if (n < 1 || n > bp_->nmax())
    throw std::out_of_range("orientation: v" + std::to_string(n) + " is outside 1.." + std::to_string(bp_->nmax()));
  if (static_cast<int>(images_.size()) > n) return;
  ensure_log(ulpow(p_, static_cast<unsigned>(n)) + 1);
  const AlphabetPtr& A = forms_->alphabet();
  // alpha(l_k) = a_{p^k} / p^k; v_k = p l_k - sum_{i<k} l_i v_{k-i}^{p^i}.
  auto log_image = [&](int k) {
    unsigned long pk = ulpow(p_, static_cast<unsigned>(k));
    return log_[pk] / Rational(static_cast<long>(pk));
  };
  std::vector<RPoly> formal;
  formal.emplace_back(A, 0);
  for (int k = 1; k <= n; ++k) {
    RPoly v = log_image(k) * Rational(p_);
    for (int i = 1; i < k; ++i) v -= log_image(i) * formal[k - i].pow(ulpow(p_, static_cast<unsigned>(i)));
    if (padic_valuation(v, p_) < 0)
      throw std::logic_error("orientation: alpha(v" + std::to_string(k) + ") is not p-integral: " + v.str());
    formal.push_back(std::move(v));
  }
  for (int k = static_cast<int>(images_.size()); k <= n; ++k) {
    RPoly img = formal[k];
    if (k == 1 && kind_ == OrientationKind::Eisenstein) {
      // E_4 = 12 g2, E_6 = -216 g3.
      img = p_ == 5 ? RPoly::generator(A, "g2") * Rational(12) : RPoly::generator(A, "g3") * Rational(-216);
    }
    cusp_images_.push_back(forms_->cusp_value(img));
    images_.push_back(std::move(img));
  }
}

const RPoly& Orientation::image(int n) const {
  ensure_images(n);
  std::lock_guard lock(mu_);
  return images_[n];
}

Cyclo Orientation::cusp_image(int n) const {
  ensure_images(n);
  std::lock_guard lock(mu_);
  return cusp_images_[n];
}

CPoly Orientation::apply(const RPoly& x) const {
  const BPContext& bp = *bp_;
  if (!bp.is_v_polynomial(x)) throw std::invalid_argument("orientation: expected a polynomial in the v's");
  return apply_tensor(bp.to_right(x)) * Cyclo(-1);
}

CPoly Orientation::apply_tensor(const RPoly& x) const {
  const BPContext& bp = *bp_;
  if (!bp.is_tensor_polynomial(x)) throw std::invalid_argument("orientation: expected a polynomial in vL, vR");
  const AlphabetPtr& B = bp.alphabet();
  int top = 0;
  for (const auto& [m, c] : x.terms())
    for (int i = 1; i <= bp.nmax(); ++i)
      if (m.e[bp.vL(i)] || m.e[bp.vR(i)]) top = std::max(top, i);
  if (top > 0) ensure_images(top);
  TermAccumulator<Cyclo> acc(B);
  for (const auto& [m, c] : x.terms()) {
    Cyclo left = -Cyclo(c);
    Monomial right;
    for (int i = 1; i <= top; ++i) {
      for (unsigned k = 0; k < m.e[bp.vL(i)]; ++k) left *= cusp_image(i);
      if (m.e[bp.vR(i)]) right.set(*B, bp.v(i), m.e[bp.vR(i)]);
    }
    acc.add(right, left);
  }
  CPoly y = std::move(acc).finish();
  SubstitutionMap<Cyclo> images(B->size());
  for (int i = 1; i <= top; ++i) images[bp.v(i)] = to_cyclo(image(i));
  return substitute(y, images, forms_->alphabet());
}

CPoly Orientation::rho(const RPoly& g) const { return apply_tensor(bp_->phi_inverse(g)); }

// ---------------------------------------------------------------------------

std::map<int, CPoly> weight_parts(const CPoly& f) {
  std::map<int, CPoly> out;
  for (int d : f.degrees()) {
    if (d % 2 != 0) throw std::invalid_argument("weight_parts: odd degree " + std::to_string(d));
    out.emplace(d / 2, f.homogeneous_part(d));
  }
  return out;
}

CPoly diamond(const CPoly& f, const Rational& a) {
  std::vector<CPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    if (m.deg % 2 != 0) throw std::invalid_argument("diamond: odd degree");
    out.emplace_back(m, c * Cyclo(rpow(a, m.deg / 2)));
  }
  return CPoly::from_terms(f.alphabet(), out);
}

bool is_divided_congruence(const CPoly& f, const ModularForms& forms, unsigned p, std::size_t precision) {
  return is_integral(forms.expansion(f, precision), p);
}

CPoly katz_d(int n, const Orientation& o) {
  if (n < 0) throw std::invalid_argument("katz_d: n must be non-negative");
  const unsigned p = o.prime();
  const AlphabetPtr& A = o.forms().alphabet();
  std::vector<RPoly> d{RPoly(A, 1)};
  for (int k = 1; k <= n; ++k) {
    unsigned long pk = ulpow(p, static_cast<unsigned>(k));
    RPoly dk = o.log_coefficient(pk) / Rational(static_cast<long>(pk));
    for (int i = 1; i <= k; ++i) {
      unsigned long pi = ulpow(p, static_cast<unsigned>(i));
      dk -= d[k - i].pow(pi) / Rational(static_cast<long>(pi));
    }
    d.push_back(std::move(dk));
  }
  return to_cyclo(d[n]);
}

// ---------------------------------------------------------------------------

namespace {

unsigned residue_prime(const std::vector<FSeries>& cols, const FSeries& target) {
  auto scan = [](const FSeries& s) -> unsigned {
    for (const auto& x : s.coefficients())
      if (x.prime() != 0) return x.prime();
    return 0;
  };
  for (const auto& c : cols)
    if (unsigned p = scan(c)) return p;
  return scan(target);
}

// Reduced row echelon form of the augmented matrix; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Residue>>& M, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < M.size(); ++col) {
    std::size_t r = row;
    while (r < M.size() && M[r][col].is_zero()) ++r;
    if (r == M.size()) continue;
    std::swap(M[r], M[row]);
    Residue inv = M[row][col].inverse();
    for (auto& x : M[row]) x *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == row || M[i][col].is_zero()) continue;
      Residue f = M[i][col];
      for (std::size_t j = col; j < M[i].size(); ++j) M[i][j] -= f * M[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Residue>> augmented(const std::vector<FSeries>& cols, const FSeries* target) {
  std::size_t n = target ? target->precision() : 0;
  for (const auto& c : cols) n = n == 0 ? c.precision() : std::min(n, c.precision());
  if (target) n = std::min(n, target->precision());
  std::vector<std::vector<Residue>> M(n, std::vector<Residue>(cols.size() + (target ? 1 : 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) M[i][j] = cols[j][i];
    if (target) M[i][cols.size()] = (*target)[i];
  }
  return M;
}

}  // namespace

std::optional<std::vector<Residue>> span_coordinates(const std::vector<FSeries>& columns, const FSeries& target) {
  unsigned p = residue_prime(columns, target);
  auto M = augmented(columns, &target);
  auto pivots = row_reduce(M, columns.size());
  const std::size_t k = columns.size();
  for (std::size_t r = pivots.size(); r < M.size(); ++r)
    if (!M[r][k].is_zero()) return std::nullopt;
  std::vector<Residue> x(k, p ? Residue(p, 0) : Residue());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M[r][k];
  return x;
}

std::vector<std::vector<Residue>> span_kernel(const std::vector<FSeries>& columns) {
  unsigned p = residue_prime(columns, FSeries());
  auto M = augmented(columns, nullptr);
  auto pivots = row_reduce(M, columns.size());
  std::vector<bool> is_pivot(columns.size(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> out;
  for (std::size_t f = 0; f < columns.size(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Residue> v(columns.size(), Residue(p, 0));
    v[f] = Residue(p, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t span_rank(const std::vector<FSeries>& columns) {
  auto M = augmented(columns, nullptr);
  return row_reduce(M, columns.size()).size();
}

const IgusaBasis& IgusaBasis::get() {
  static const IgusaBasis basis;
  return basis;
}

IgusaBasis::IgusaBasis() : alpha_(make_alphabet({"T", "a3"}, {2, 6})) {}

FSeries IgusaBasis::t_bar(std::size_t precision) const {
  const ModularForms& M = ModularForms::get(3);
  CPoly a1 = M.gen("a1");
  CPoly T = (CPoly(M.alphabet(), M.cusp_value(a1)) - a1) * Cyclo(frac(1, 2));
  return reduce_mod_p(M.expansion(T, precision), 2);
}

FSeries IgusaBasis::a3_bar(std::size_t precision) const {
  const ModularForms& M = ModularForms::get(3);
  return reduce_mod_p(M.expansion(M.gen("a3"), precision), 2);
}

FSeries IgusaBasis::expansion(const FPoly& f, std::size_t precision) const {
  FSeries t = t_bar(precision), a = a3_bar(precision);
  FSeries out = FSeries::constant(precision, Residue(2, 0));
  for (const auto& [m, c] : f.terms()) {
    out += (t.pow(m.e[0]) * a.pow(m.e[1])) * c;
  }
  return out;
}

std::optional<FPoly> IgusaBasis::express(const FSeries& x, unsigned max_a3_power) const {
  const std::size_t N = x.precision();
  FSeries t = t_bar(N), a = a3_bar(N);
  std::vector<FSeries> cols;
  std::vector<Monomial> monos;
  FSeries ai = FSeries::constant(N, Residue(2, 1));
  for (unsigned i = 0; i <= max_a3_power; ++i) {
    for (unsigned j = 0; j <= 1; ++j) {
      cols.push_back(j == 0 ? ai : ai * t);
      monos.push_back(Monomial::from_exponents(*alpha_, {j, i}));
    }
    ai *= a;
  }
  if (span_rank(cols) < cols.size())
    throw std::domain_error("Igusa basis up to a3^" + std::to_string(max_a3_power) +
                            " is degenerate at precision " + std::to_string(N));
  auto coords = span_coordinates(cols, x);
  if (!coords) return std::nullopt;
  std::vector<FPoly::Term> terms;
  for (std::size_t k = 0; k < cols.size(); ++k)
    if (!(*coords)[k].is_zero()) terms.emplace_back(monos[k], (*coords)[k]);
  return FPoly::from_terms(alpha_, terms);
}

}  // namespace fbeta
