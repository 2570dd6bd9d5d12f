#include "fbeta/monomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fbeta {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) throw std::invalid_argument("alphabet: size mismatch");
  if (names_.size() > kMaxGenerators)
    throw std::invalid_argument("alphabet: more than " + std::to_string(kMaxGenerators) + " generators");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (degrees_[i] <= 0) throw std::invalid_argument("alphabet: generator " + names_[i] + " needs positive degree");
    if (!lookup_.emplace(names_[i], i).second)
      throw std::invalid_argument("alphabet: duplicate generator " + names_[i]);
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alphabet::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown generator " + std::string(name));
  return *i;
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const Alphabet>(std::move(names), std::move(degrees));
}

bool alphabets_equal(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!a || !b || a == b) return true;
  return a->same_as(*b);
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!alphabets_equal(a, b)) throw std::invalid_argument("alphabet mismatch");
}

Monomial Monomial::generator(const Alphabet& a, std::size_t i, unsigned power) {
  Monomial m;
  m.set(a, i, power);
  return m;
}

Monomial Monomial::from_exponents(const Alphabet& a, const std::vector<unsigned>& exps) {
  if (exps.size() > a.size()) throw std::invalid_argument("too many exponents for alphabet");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(a, i, exps[i]);
  return m;
}

void Monomial::set(const Alphabet& a, std::size_t i, unsigned power) {
  if (i >= a.size()) throw std::out_of_range("generator index");
  if (power > 255) throw std::overflow_error("monomial exponent exceeds 255");
  deg += a.degree(i) * (static_cast<int>(power) - static_cast<int>(e[i]));
  e[i] = static_cast<std::uint8_t>(power);
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::uint8_t x) { return x == 0; });
}

unsigned Monomial::total_exponent() const {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < kMaxGenerators; ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    unsigned s = static_cast<unsigned>(e[i]) + o.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    m.e[i] = static_cast<std::uint8_t>(s);
  }
  m.deg = deg + o.deg;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw std::domain_error("monomial division is not exact");
  Monomial m;
  for (std::size_t i = 0; i < kMaxGenerators; ++i) m.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
  m.deg = deg - o.deg;
  return m;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxGenerators; ++i) {
    unsigned s = static_cast<unsigned>(e[i]) * k;
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    m.e[i] = static_cast<std::uint8_t>(s);
  }
  m.deg = deg * static_cast<std::int32_t>(k);
  return m;
}

std::string Monomial::str(const Alphabet& a) const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += a.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

int compare(const Monomial& x, const Monomial& y) {
  if (x.deg != y.deg) return x.deg < y.deg ? -1 : 1;
  for (std::size_t i = kMaxGenerators; i-- > 0;) {
    if (x.e[i] != y.e[i]) return x.e[i] < y.e[i] ? -1 : 1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto b : m.e) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::vector<Monomial> monomials_of_degree(const Alphabet& a, const std::vector<std::size_t>& gens,
                                          int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (k == gens.size()) return;
    std::size_t g = gens[k];
    int d = a.degree(g);
    for (unsigned p = 0; static_cast<int>(p) * d <= remaining; ++p) {
      cur.set(a, g, p);
      rec(k + 1, remaining - static_cast<int>(p) * d);
    }
    cur.set(a, g, 0);
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), MonomialGreater());
  return out;
}

}  // namespace fbeta
