#include "fbeta/bp.hpp"

#include <memory>
#include <stdexcept>

namespace fbeta {

namespace {

constexpr int kLeft = 0, kRight = 1, kV = 2, kT = 3;

int choose_nmax(unsigned p) {
  int n = 2;
  while (2 * (static_cast<double>(ulpow(p, static_cast<unsigned>(n + 1))) - 1) <= 200) ++n;
  return n;
}

}  // namespace

const BPContext& BPContext::get(unsigned p) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<BPContext>> contexts;
  std::lock_guard<std::mutex> lock(mu);
  auto it = contexts.find(p);
  if (it == contexts.end()) it = contexts.emplace(p, std::make_unique<BPContext>(p)).first;
  return *it->second;
}

BPContext::BPContext(unsigned p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("BP: " + std::to_string(p) + " is not prime");
  nmax_ = choose_nmax(p);
  degree_bound_ = 2 * static_cast<int>(ulpow(p, static_cast<unsigned>(nmax_ + 1)) - 1);
  std::vector<std::string> names;
  std::vector<int> degrees;
  const char* prefix[] = {"vL", "vR", "v", "t"};
  for (int f = 0; f < 4; ++f) {
    for (int i = 1; i <= nmax_; ++i) {
      names.push_back(prefix[f] + std::to_string(i));
      degrees.push_back(generator_degree(i));
    }
  }
  alpha_ = make_alphabet(names, degrees);

  logs_.push_back(RPoly(alpha_, Rational(1)));
  for (int n = 1; n <= nmax_; ++n) {
    RPoly s = gen(v(n));
    for (int i = 1; i < n; ++i) s += logs_[i] * gen(v(n - i), ulpow(p_, static_cast<unsigned>(i)));
    logs_.push_back(s / Rational(p_));
  }
}

int BPContext::generator_degree(int i) const {
  return 2 * static_cast<int>(ulpow(p_, static_cast<unsigned>(i)) - 1);
}

std::size_t BPContext::index(int family, int i) const {
  if (i < 1 || i > nmax_)
    throw std::out_of_range("BP generator index " + std::to_string(i) + " outside 1.." + std::to_string(nmax_));
  return static_cast<std::size_t>(family * nmax_ + i - 1);
}

void BPContext::require_degree(int degree) const {
  if (degree >= degree_bound_)
    throw std::out_of_range("degree " + std::to_string(degree) + " exceeds the supported bound " +
                            std::to_string(degree_bound_) + " at p=" + std::to_string(p_));
}

bool BPContext::uses_only(const Monomial& m, const std::vector<int>& families) const {
  for (int f = 0; f < 4; ++f) {
    bool allowed = false;
    for (int g : families) allowed = allowed || g == f;
    if (allowed) continue;
    for (int i = 1; i <= nmax_; ++i)
      if (m[index(f, i)]) return false;
  }
  return true;
}

bool BPContext::is_v_polynomial(const RPoly& f) const {
  for (const auto& t : f.terms())
    if (!uses_only(t.first, {kV})) return false;
  return true;
}

bool BPContext::is_gamma_polynomial(const RPoly& f) const {
  for (const auto& t : f.terms())
    if (!uses_only(t.first, {kV, kT})) return false;
  return true;
}

bool BPContext::is_tensor_polynomial(const RPoly& f) const {
  for (const auto& t : f.terms())
    if (!uses_only(t.first, {kLeft, kRight})) return false;
  return true;
}

bool BPContext::is_pure_tensor(const Monomial& m) const {
  return uses_only(m, {kLeft}) || uses_only(m, {kRight});
}

const RPoly& BPContext::log(int n) const {
  if (n < 0 || n > nmax_) throw std::out_of_range("log index");
  return logs_[static_cast<std::size_t>(n)];
}

RPoly BPContext::eta_R_log(int n) const {
  RPoly s(alpha_);
  for (int j = 0; j <= n; ++j) {
    RPoly tp = j == n ? RPoly(alpha_, Rational(1)) : gen(t(n - j), ulpow(p_, static_cast<unsigned>(j)));
    s += logs_[static_cast<std::size_t>(j)] * tp;
  }
  return s;
}

const RPoly& BPContext::eta_R_generator(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = eta_gen_.find(n);
  if (it != eta_gen_.end()) return it->second;
  index(kV, n);
  // p l_n = v_n + sum_{i=1}^{n-1} l_i v_{n-i}^{p^i}, pushed through eta_R.
  RPoly value = eta_R_log(n) * Rational(p_);
  for (int i = 1; i < n; ++i) {
    value -= eta_R_log(i) * eta_R_generator(n - i).pow(ulpow(p_, static_cast<unsigned>(i)));
  }
  for (const auto& [m, c] : value.terms()) {
    if (c.get_den() != 1)
      throw std::logic_error("eta_R(v" + std::to_string(n) + ") has non-integral coefficient " + to_string(c) +
                             " at " + m.str(*alpha_));
  }
  return eta_gen_.emplace(n, std::move(value)).first->second;
}

void BPContext::seed_eta_R(int n, const RPoly& value) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!alphabets_equal(value.alphabet(), alpha_)) throw std::invalid_argument("seed_eta_R: alphabet mismatch");
  if (!value.is_zero() && value.degree() != generator_degree(n))
    throw std::invalid_argument("seed_eta_R: wrong degree");
  if (!is_gamma_polynomial(value)) throw std::invalid_argument("seed_eta_R: not an element of Gamma");
  eta_gen_.emplace(n, value.relabel(alpha_));
}

std::map<int, RPoly> BPContext::eta_R_table() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return eta_gen_;
}

const RPoly& BPContext::power_image(HomCache& cache, std::size_t g, unsigned k,
                                    const std::function<RPoly(std::size_t)>& image) const {
  auto key = std::make_pair(g, k);
  auto it = cache.powers.find(key);
  if (it != cache.powers.end()) return it->second;
  RPoly value;
  if (k == 1) {
    value = image(g);
  } else {
    const RPoly& half = power_image(cache, g, k / 2, image);
    value = half * half;
    if (k % 2 == 1) value = value * power_image(cache, g, 1, image);
  }
  return cache.powers.emplace(key, std::move(value)).first->second;
}

const RPoly& BPContext::monomial_image(HomCache& cache, const Monomial& m,
                                       const std::function<RPoly(std::size_t)>& image) const {
  auto it = cache.monomials.find(m);
  if (it != cache.monomials.end()) return it->second;
  RPoly value;
  if (m.is_one()) {
    value = RPoly(alpha_, Rational(1));
  } else {
    std::size_t g = kMaxGenerators;
    while (m[--g] == 0) {
    }
    Monomial rest = m;
    rest.set(*alpha_, g, 0);
    const RPoly& head = monomial_image(cache, rest, image);
    value = head * power_image(cache, g, m[g], image);
  }
  return cache.monomials.emplace(m, std::move(value)).first->second;
}

RPoly BPContext::eta_R(const RPoly& x) const {
  if (!is_v_polynomial(x)) throw std::invalid_argument("eta_R: argument must be a polynomial in the v's");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto image = [this](std::size_t g) { return eta_R_generator(static_cast<int>(g) - 2 * nmax_ + 1); };
  TermAccumulator<Rational> acc(alpha_);
  for (const auto& [m, c] : x.terms()) acc.add_scaled(monomial_image(eta_cache_, m, image), c);
  return std::move(acc).finish();
}

const RPoly& BPContext::phi_inverse_t(int n) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = phi_inv_t_.find(n);
  if (it != phi_inv_t_.end()) return it->second;
  index(kT, n);
  // 1 (x) l_n = sum_j (l_j (x) 1) phi^{-1}(t_{n-j})^{p^j}
  RPoly value = to_right(logs_[static_cast<std::size_t>(n)]);
  for (int j = 1; j <= n; ++j) {
    RPoly prev = j == n ? RPoly(alpha_, Rational(1)) : phi_inverse_t(n - j);
    value -= to_left(logs_[static_cast<std::size_t>(j)]) * prev.pow(ulpow(p_, static_cast<unsigned>(j)));
  }
  return phi_inv_t_.emplace(n, std::move(value)).first->second;
}

RPoly BPContext::substitute_family(const RPoly& x, int from, int to) const {
  std::vector<RPoly::Term> out;
  out.reserve(x.size());
  for (const auto& [m, c] : x.terms()) {
    if (!uses_only(m, {from})) throw std::invalid_argument("unexpected generator family in " + m.str(*alpha_));
    Monomial n;
    for (int i = 1; i <= nmax_; ++i)
      if (m[index(from, i)]) n.set(*alpha_, index(to, i), m[index(from, i)]);
    out.emplace_back(n, c);
  }
  return RPoly::from_terms(alpha_, out);
}

RPoly BPContext::to_left(const RPoly& x) const { return substitute_family(x, kV, kLeft); }
RPoly BPContext::to_right(const RPoly& x) const { return substitute_family(x, kV, kRight); }
RPoly BPContext::from_tensor_side(const RPoly& x, int family) const { return substitute_family(x, family, kV); }

RPoly BPContext::phi_inverse_monomial(const Monomial& m) const {
  if (!uses_only(m, {kV, kT})) throw std::invalid_argument("phi_inverse: not a Gamma-monomial");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto image = [this](std::size_t g) { return phi_inverse_t(static_cast<int>(g) - 3 * nmax_ + 1); };
  Monomial vpart, tpart, shift;
  for (int i = 1; i <= nmax_; ++i) {
    if (m[v(i)]) shift.set(*alpha_, vL(i), m[v(i)]);
    if (m[t(i)]) tpart.set(*alpha_, t(i), m[t(i)]);
  }
  return monomial_image(phi_inv_cache_, tpart, image).shifted(shift);
}

RPoly BPContext::phi_inverse(const RPoly& g) const {
  if (!is_gamma_polynomial(g)) throw std::invalid_argument("phi_inverse: argument must lie in Gamma (x) Q");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto image = [this](std::size_t gi) { return phi_inverse_t(static_cast<int>(gi) - 3 * nmax_ + 1); };
  TermAccumulator<Rational> acc(alpha_);
  for (const auto& [m, c] : g.terms()) {
    Monomial tpart, shift;
    for (int i = 1; i <= nmax_; ++i) {
      if (m[v(i)]) shift.set(*alpha_, vL(i), m[v(i)]);
      if (m[t(i)]) tpart.set(*alpha_, t(i), m[t(i)]);
    }
    acc.add_scaled(monomial_image(phi_inv_cache_, tpart, image), c, shift);
  }
  return std::move(acc).finish();
}

RPoly BPContext::phi(const RPoly& x) const {
  if (!is_tensor_polynomial(x)) throw std::invalid_argument("phi: argument must lie in the tensor square");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto image = [this](std::size_t g) { return eta_R_generator(static_cast<int>(g) - nmax_ + 1); };
  TermAccumulator<Rational> acc(alpha_);
  for (const auto& [m, c] : x.terms()) {
    Monomial rpart, shift;
    for (int i = 1; i <= nmax_; ++i) {
      if (m[vL(i)]) shift.set(*alpha_, v(i), m[vL(i)]);
      if (m[vR(i)]) rpart.set(*alpha_, vR(i), m[vR(i)]);
    }
    acc.add_scaled(monomial_image(phi_cache_, rpart, image), c, shift);
  }
  return std::move(acc).finish();
}

std::vector<Monomial> BPContext::gamma_monomials(int degree) const {
  require_degree(degree);
  std::vector<std::size_t> gens;
  for (int i = 1; i <= nmax_; ++i) {
    gens.push_back(v(i));
    gens.push_back(t(i));
  }
  return monomials_of_degree(*alpha_, gens, degree);
}

std::vector<Monomial> BPContext::tensor_monomials(int degree) const {
  require_degree(degree);
  std::vector<std::size_t> gens;
  for (int i = 1; i <= nmax_; ++i) {
    gens.push_back(vL(i));
    gens.push_back(vR(i));
  }
  return monomials_of_degree(*alpha_, gens, degree);
}

}  // namespace fbeta
