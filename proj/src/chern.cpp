#include "fbeta/chern.hpp"

#include <mutex>
#include <stdexcept>

#include "fbeta/parse.hpp"

namespace fbeta {

namespace {

constexpr std::size_t kC0 = kMaxLogIndex;  // first c in symmetric_alphabet

AlphabetPtr build_alphabet(const std::vector<std::pair<std::string, int>>& gens) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const auto& [n, d] : gens) {
    names.push_back(n);
    degrees.push_back(d);
  }
  return make_alphabet(names, degrees);
}

int log_degree(int i) { return 2 * ((1 << i) - 1); }

bool is_chern_generator(std::size_t g) { return g >= kC0 && g < kC0 + kMaxChernIndex; }

// Splits a symmetric_alphabet polynomial into (monomial in the c's, v-polynomial).
std::vector<std::pair<Monomial, RPoly>> split_chern(const RPoly& f) {
  const AlphabetPtr& A = symmetric_alphabet();
  std::map<std::vector<unsigned>, std::pair<Monomial, TermAccumulator<Rational>>> parts;
  for (const auto& [m, c] : f.terms()) {
    Monomial cm, vm;
    std::vector<unsigned> key(kMaxChernIndex);
    for (std::size_t g = 0; g < A->size(); ++g) {
      if (!m[g]) continue;
      if (is_chern_generator(g)) {
        cm.set(*A, g, m[g]);
        key[g - kC0] = m[g];
      } else {
        vm.set(*A, g, m[g]);
      }
    }
    auto it = parts.try_emplace(key, cm, TermAccumulator<Rational>(A)).first;
    it->second.second.add(vm, c);
  }
  std::vector<std::pair<Monomial, RPoly>> out;
  for (auto& [k, part] : parts) out.emplace_back(part.first, std::move(part.second).finish());
  return out;
}

// Log of a series with constant term 1: integrate Q'/Q.
PolySeries log_one_plus(const PolySeries& q) {
  std::size_t n = q.precision();
  PolySeries d = q.derivative() * q.truncated(n - 1).inverse();
  PolySeries out(n);
  for (std::size_t k = 1; k < n; ++k) out[k] = d[k - 1] / Rational(static_cast<long>(k));
  return out;
}

struct Row {
  std::string name;
  RPoly full;
  RPoly outside;  // terms outside B
};

}  // namespace

const AlphabetPtr& genus_alphabet() {
  static const AlphabetPtr a = [] {
    std::vector<std::pair<std::string, int>> g;
    for (int i = 1; i <= kMaxLogIndex; ++i) g.emplace_back("l" + std::to_string(i), log_degree(i));
    return build_alphabet(g);
  }();
  return a;
}

const AlphabetPtr& symmetric_alphabet() {
  static const AlphabetPtr a = [] {
    std::vector<std::pair<std::string, int>> g;
    for (int i = 1; i <= kMaxLogIndex; ++i) g.emplace_back("v" + std::to_string(i), log_degree(i));
    for (int j = 1; j <= kMaxChernIndex; ++j) g.emplace_back("c" + std::to_string(j), 2 * j);
    return build_alphabet(g);
  }();
  return a;
}

const AlphabetPtr& newton_alphabet() {
  static const AlphabetPtr a = [] {
    std::vector<std::pair<std::string, int>> g;
    for (int j = 1; j <= kMaxChernIndex; ++j) g.emplace_back("e" + std::to_string(j), 2 * j);
    for (int j = 1; j <= kMaxChernIndex; ++j) g.emplace_back("p" + std::to_string(j), 2 * j);
    return build_alphabet(g);
  }();
  return a;
}

const AlphabetPtr& two_sided_alphabet() {
  static const AlphabetPtr a = [] {
    std::vector<std::pair<std::string, int>> g;
    for (int side = 0; side < 2; ++side)
      for (int j = 1; j <= kMaxChernIndex; ++j)
        g.emplace_back("c" + std::to_string(j) + "_" + std::to_string(side), 2 * j);
    return build_alphabet(g);
  }();
  return a;
}

PolySeries genus_Q(std::size_t m) {
  if (m < 2) throw std::invalid_argument("genus_Q: precision must be at least 2");
  if (m >= (std::size_t{1} << (kMaxLogIndex + 1)))
    throw std::invalid_argument("genus_Q: precision beyond l" + std::to_string(kMaxLogIndex));
  const AlphabetPtr& A = genus_alphabet();
  PolySeries log(m + 1);
  log[1] = RPoly(A, Rational(1));
  for (int i = 1; (std::size_t{1} << i) <= m; ++i) log[std::size_t{1} << i] = RPoly::generator(A, i - 1);
  PolySeries e = log.reverse().shift_down(1);  // exp(x) / x
  return e.inverse();
}

RPoly l_to_v(const RPoly& f) {
  const BPContext& bp = BPContext::get(2);
  SubstitutionMap<Rational> images(genus_alphabet()->size());
  for (int i = 1; i <= kMaxLogIndex; ++i)
    images[static_cast<std::size_t>(i - 1)] = bp.log(i).relabel(symmetric_alphabet());
  return substitute(f, images, symmetric_alphabet());
}

RPoly power_sum_in_elementary(int k) {
  if (k < 1 || k > kMaxChernIndex) throw std::invalid_argument("power sum index out of range");
  static std::mutex mu;
  static std::map<int, RPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  const AlphabetPtr& A = newton_alphabet();
  for (int n = static_cast<int>(cache.size()) + 1; n <= k; ++n) {
    // p_n = sum_{i<n} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
    RPoly e_n = RPoly::generator(A, static_cast<std::size_t>(n - 1));
    RPoly p = e_n * Rational(n % 2 ? n : -n);
    for (int i = 1; i < n; ++i) {
      RPoly term = RPoly::generator(A, static_cast<std::size_t>(i - 1)) * cache.at(n - i);
      p += i % 2 ? term : -term;
    }
    cache.emplace(n, std::move(p));
  }
  return cache.at(k);
}

RPoly elementary_in_power_sums(int k) {
  if (k < 0 || k > kMaxChernIndex) throw std::invalid_argument("elementary index out of range");
  static std::mutex mu;
  static std::map<int, RPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  const AlphabetPtr& A = newton_alphabet();
  if (cache.empty()) cache.emplace(0, RPoly(A, Rational(1)));
  for (int n = static_cast<int>(cache.size()); n <= k; ++n) {
    // n e_n = sum_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i
    RPoly e(A);
    for (int i = 1; i <= n; ++i) {
      RPoly term = cache.at(n - i) * RPoly::generator(A, static_cast<std::size_t>(kMaxChernIndex + i - 1));
      e += i % 2 ? term : -term;
    }
    cache.emplace(n, e / Rational(n));
  }
  return cache.at(k);
}

std::map<std::string, RPoly> SymmetricExpansion::by_chern_monomial() const {
  std::map<std::string, RPoly> out;
  for (auto& [cm, v] : split_chern(poly)) out.emplace(cm.str(*symmetric_alphabet()), std::move(v));
  return out;
}

const SymmetricExpansion& pi_component(int degree) {
  if (degree < 0 || degree % 2 || degree > 2 * kMaxChernIndex)
    throw std::invalid_argument("pi_component: degree must be even and at most " + std::to_string(2 * kMaxChernIndex));
  static std::mutex mu;
  static std::vector<SymmetricExpansion> table;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    const AlphabetPtr& S = symmetric_alphabet();
    const std::size_t top = kMaxChernIndex;
    PolySeries logq = log_one_plus(genus_Q(top + 1));
    // e_j -> c_j
    SubstitutionMap<Rational> to_c(newton_alphabet()->size());
    for (std::size_t j = 0; j < top; ++j) to_c[j] = RPoly::generator(S, kC0 + j);
    // L_k = q_k p_k, and P = exp(sum L_k) via n P_n = sum_k k L_k P_{n-k}.
    std::vector<RPoly> L(top + 1, RPoly(S));
    for (std::size_t k = 1; k <= top; ++k)
      L[k] = l_to_v(logq[k]) * substitute(power_sum_in_elementary(static_cast<int>(k)), to_c, S);
    std::vector<RPoly> P(top + 1, RPoly(S));
    P[0] = RPoly(S, Rational(1));
    for (std::size_t n = 1; n <= top; ++n) {
      RPoly acc(S);
      for (std::size_t k = 1; k <= n; ++k) acc += L[k] * P[n - k] * Rational(static_cast<long>(k));
      P[n] = acc / Rational(static_cast<long>(n));
    }
    for (std::size_t n = 0; n <= top; ++n) table.push_back({2 * static_cast<int>(n), P[n]});
  }
  return table.at(static_cast<std::size_t>(degree / 2));
}

KervaireReduction kervaire_reduction(int dimension) {
  int n = 0;
  while ((1 << n) < dimension) ++n;
  if (dimension < 4 || (1 << n) != dimension || dimension > 2 * kMaxChernIndex + 2)
    throw std::invalid_argument("kervaire_reduction: dimension must be a power of 2 between 4 and " +
                                std::to_string(2 * kMaxChernIndex));
  const BPContext& bp = BPContext::get(2);
  const AlphabetPtr& BA = bp.alphabet();
  const AlphabetPtr& T = two_sided_alphabet();
  const int E = 1 << (n - 1);  // corner denominator 2^E
  const unsigned half = 1U << (n - 2);
  Monomial corner = Monomial::generator(*BA, bp.vL(1), half) * Monomial::generator(*BA, bp.vR(1), half);
  auto in_b = [&bp](const Monomial& m) {
    for (std::size_t g = 0; g < kMaxGenerators; ++g)
      if (m[g] && g != bp.vL(1) && g != bp.vL(2) && g != bp.vR(1)) return false;
    return true;
  };
  auto outside = [&](const RPoly& x) {
    return x.filter([&](const Monomial& m, const Rational&) { return !bp.is_pure_tensor(m) && !in_b(m); });
  };

  KervaireReduction out;
  out.dimension = dimension;

  // Gamma-monomials used to clear tensor monomials outside B.
  std::vector<RPoly> candidates;
  if (dimension == 8) {
    candidates.push_back(bp.gen(bp.t(1)) * bp.gen(bp.t(2)));
  } else if (dimension > 8) {
    int d1 = bp.generator_degree(1), d2 = bp.generator_degree(2);
    for (int j = 0; j * d2 + d2 <= dimension; ++j)
      for (int k = 0; j * d2 + d2 + k * d1 <= dimension; ++k) {
        int rest = dimension - d2 - j * d2 - k * d1;
        if (rest % d1) continue;
        candidates.push_back(bp.gen(bp.v(1), static_cast<unsigned>(rest / d1)) *
                             bp.gen(bp.v(2), static_cast<unsigned>(j)) * bp.gen(bp.t(1), static_cast<unsigned>(k)) *
                             bp.gen(bp.t(2)));
      }
  }

  // Echelon form over Z_(2) of the parts outside B, pivoting on the smallest valuation.
  std::vector<Row> rows;
  for (const auto& g : candidates) {
    RPoly img = bp.phi_inverse(g);
    out.gamma_monomials_used.push_back(g.leading_term().first.str(*BA));
    rows.push_back({out.gamma_monomials_used.back(), img, outside(img)});
  }
  std::vector<std::pair<Monomial, Row>> pivots;
  std::vector<Row> pending = rows;
  while (true) {
    std::optional<Monomial> col;
    for (const auto& r : pending)
      if (!r.outside.is_zero()) {
        col = r.outside.leading_term().first;
        break;
      }
    if (!col) break;
    std::size_t best = pending.size();
    long best_v = kInfiniteValuation;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      Rational c = pending[i].outside.coefficient(*col);
      if (is_zero(c)) continue;
      long v = padic_valuation(c, 2);
      if (v < best_v) best_v = v, best = i;
    }
    Row piv = pending[best];
    pending.erase(pending.begin() + static_cast<long>(best));
    Rational pc = piv.outside.coefficient(*col);
    for (auto& r : pending) {
      Rational c = r.outside.coefficient(*col);
      if (is_zero(c)) continue;
      Rational f = c / pc;
      r.full -= piv.full * f;
      r.outside -= piv.outside * f;
    }
    pivots.emplace_back(*col, std::move(piv));
  }

  // The corner coefficient is read modulo the corner entries of all relations in B.
  long corner_floor = kInfiniteValuation;
  for (const auto& [m, p] : LatticeBasis::kervaire_quotient(dimension)->pivots())
    corner_floor = std::min(corner_floor, padic_valuation(p.vector.coefficient(corner), 2));
  for (const auto& r : pending) corner_floor = std::min(corner_floor, padic_valuation(r.full.coefficient(corner), 2));
  if (corner_floor != kInfiniteValuation && corner_floor < 1 - E)
    throw std::logic_error("kervaire_reduction: a relation carries a corner term with denominator 2^" +
                           std::to_string(-corner_floor));

  // K = sum_i Pi^{(i)}(c^{(0)}) (x) Pi^{(dim - i)}(c^{(1)}), split by Chern monomial.
  bool ok = true;
  FPoly total(T);
  for (int i = 2; i <= dimension - 2; i += 2) {
    auto left = split_chern(pi_component(i).poly);
    auto right = split_chern(pi_component(dimension - i).poly);
    TermAccumulator<Residue> bits(T);
    for (const auto& [m0, p0] : left) {
      RPoly l = bp.to_left(p0.relabel(BA));
      for (const auto& [m1, p1] : right) {
        Monomial mu;
        for (std::size_t j = 0; j < static_cast<std::size_t>(kMaxChernIndex); ++j) {
          if (m0[kC0 + j]) mu.set(*T, j, m0[kC0 + j]);
          if (m1[kC0 + j]) mu.set(*T, kMaxChernIndex + j, m1[kC0 + j]);
        }
        RPoly x = (l * bp.to_right(p1.relabel(BA))).filter(
            [&bp](const Monomial& m, const Rational&) { return !bp.is_pure_tensor(m); });
        RPoly rest = outside(x);
        bool cleared = true;
        for (const auto& [col, piv] : pivots) {
          Rational c = rest.coefficient(col);
          if (is_zero(c)) continue;
          Rational f = c / piv.outside.coefficient(col);
          if (!is_p_integral(f, 2)) {
            out.unresolved.push_back(col.str(*BA) + " [" + mu.str(*T) + "]");
            cleared = false;
            break;
          }
          x -= piv.full * f;
          rest -= piv.outside * f;
        }
        if (cleared)
          for (const auto& [m, c] : rest.terms()) {
            out.unresolved.push_back(m.str(*BA) + " [" + mu.str(*T) + "]");
            cleared = false;
          }
        if (!cleared) {
          ok = false;
          continue;
        }
        x = x.filter([&bp](const Monomial& m, const Rational&) { return !bp.is_pure_tensor(m); });
        TensorCoset coset = kervaire_reduce(x, dimension);
        Rational scaled = coset.representative.coefficient(corner) * rpow(Rational(2), E);
        if (!is_p_integral(scaled, 2))
          throw std::logic_error("kervaire_reduction: corner coefficient of " + mu.str(*T) + " has denominator beyond 2^" +
                                 std::to_string(E));
        if (residue_mod_prime(scaled, 2)) bits.add(mu, Residue(2, 1));
      }
    }
    FPoly part = std::move(bits).finish();
    total += part;
    out.contributions.emplace(i, std::move(part));
  }
  out.complete = ok;
  if (ok) out.polynomial = total;
  return out;
}

FPoly kervaire_chern_polynomial(int dimension) {
  if (dimension != 4 && dimension != 8)
    throw std::invalid_argument("kervaire_chern_polynomial: unsupported dimension " + std::to_string(dimension) +
                                " (4 or 8)");
  static std::mutex mu;
  static std::map<int, FPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dimension);
  if (it != cache.end()) return it->second;
  KervaireReduction r = kervaire_reduction(dimension);
  if (!r.polynomial) throw std::logic_error("kervaire_chern_polynomial: reduction incomplete");
  return cache.emplace(dimension, *r.polynomial).first->second;
}

std::vector<std::string> required_chern_numbers(int dimension) {
  std::vector<std::string> out;
  FPoly f = kervaire_chern_polynomial(dimension);
  for (const auto& [m, c] : f.terms()) out.push_back(m.str(*two_sided_alphabet()));
  return out;
}

ManifoldVerdict evaluate_manifold(const ChernData& data) {
  FPoly f = kervaire_chern_polynomial(data.dimension);
  const AlphabetPtr& T = two_sided_alphabet();
  std::map<std::vector<unsigned>, Integer> given;
  for (const auto& [key, value] : data.numbers) {
    RPoly m;
    try {
      m = parse_polynomial(key, T);
    } catch (const std::exception& e) {
      throw std::invalid_argument("bad Chern monomial '" + key + "': " + e.what());
    }
    if (m.size() != 1 || m.leading_term().second != 1)
      throw std::invalid_argument("bad Chern monomial '" + key + "'");
    const Monomial& mm = m.leading_term().first;
    std::vector<unsigned> k(mm.e.begin(), mm.e.end());
    if (!given.emplace(k, value).second) throw std::invalid_argument("Chern number given twice: " + key);
  }
  ManifoldVerdict v;
  v.dimension = data.dimension;
  v.value = 0;
  std::string missing;
  for (const auto& [m, c] : f.terms()) {
    auto it = given.find(std::vector<unsigned>(m.e.begin(), m.e.end()));
    if (it == given.end()) {
      missing += (missing.empty() ? "" : ", ") + m.str(*T);
      continue;
    }
    v.value += it->second;
  }
  if (!missing.empty()) throw std::invalid_argument("incomplete Chern data, missing: " + missing);
  v.kervaire_one = mpz_odd_p(v.value.get_mpz_t()) != 0;
  v.polynomial = f.str();
  return v;
}

}  // namespace fbeta
