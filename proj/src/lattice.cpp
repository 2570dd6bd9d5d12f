#include "fbeta/lattice.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fbeta {

namespace {

constexpr int kMaxOrderExponent = 256;

}  // namespace

LatticeBasis::LatticeBasis(unsigned p, int degree, AlphabetPtr alpha, CoordinateFilter is_coordinate)
    : p_(p), degree_(degree), alpha_(std::move(alpha)), is_coordinate_(std::move(is_coordinate)) {}

RPoly LatticeBasis::project(const RPoly& x) const {
  return x.filter([this](const Monomial& m, const Rational&) { return is_coordinate_(m); });
}

void LatticeBasis::set_pivot(const Monomial& c, Pivot pivot) { pivots_[c] = std::move(pivot); }

long LatticeBasis::denominator_exponent() const {
  long m = 0;
  for (const auto& [c, piv] : pivots_) m = std::max(m, -piv.exponent);
  return m;
}

void LatticeBasis::insert(const RPoly& v) {
  RPoly cur = project(v);
  while (!cur.is_zero()) {
    Monomial c = cur.leading_term().first;
    Rational coef = cur.leading_term().second;
    long e = padic_valuation(coef, p_);
    Rational unit = coef / rpow(Rational(p_), e);
    auto it = pivots_.find(c);
    if (it == pivots_.end()) {
      pivots_.emplace(c, Pivot{cur / unit, e});
      return;
    }
    if (e >= it->second.exponent) {
      cur -= it->second.vector * (coef / rpow(Rational(p_), it->second.exponent));
    } else {
      // The new vector has the smaller pivot; the old pivot vector is reduced instead.
      Pivot old = std::move(it->second);
      it->second = Pivot{cur / unit, e};
      cur = old.vector - it->second.vector * rpow(Rational(p_), old.exponent - e);
    }
  }
}

RPoly LatticeBasis::reduce(const RPoly& x) const {
  std::map<Monomial, Rational, MonomialGreater> work;
  RPoly projected = project(x);
  for (const auto& [m, c] : projected.terms()) work.emplace(m, c);
  for (auto it = work.begin(); it != work.end();) {
    if (sgn(it->second) == 0) {
      it = work.erase(it);
      continue;
    }
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    Rational scale = rpow(Rational(p_), piv->second.exponent);
    Rational canon = scale * p_fractional_part(it->second / scale, p_);
    Rational lambda = (it->second - canon) / scale;
    if (sgn(lambda) != 0) {
      for (const auto& [m, c] : piv->second.vector.terms()) {
        auto [slot, inserted] = work.try_emplace(m, -lambda * c);
        if (!inserted) slot->second -= lambda * c;
      }
    }
    if (sgn(it->second) == 0) {
      it = work.erase(it);
    } else {
      ++it;
    }
  }
  std::vector<RPoly::Term> out;
  out.reserve(work.size());
  for (auto& [m, c] : work)
    if (sgn(c) != 0) out.emplace_back(m, std::move(c));
  return RPoly::from_sorted_terms(alpha_, std::move(out));
}

namespace {

struct FullCache {
  std::mutex mu;
  std::map<std::pair<unsigned, int>, std::shared_ptr<const LatticeBasis>> entries;
};

FullCache& full_cache() {
  static FullCache c;
  return c;
}

std::shared_ptr<LatticeBasis> empty_full(unsigned p, int degree) {
  const BPContext& bp = BPContext::get(p);
  return std::make_shared<LatticeBasis>(p, degree, bp.alphabet(),
                                        [&bp](const Monomial& m) { return !bp.is_pure_tensor(m); });
}

}  // namespace

std::shared_ptr<const LatticeBasis> LatticeBasis::full_from_pivots(
    unsigned p, int degree, std::unordered_map<Monomial, Pivot, MonomialHash> pivots) {
  auto basis = empty_full(p, degree);
  for (auto& [c, piv] : pivots) {
    if (!basis->is_coordinate(c) || c.deg != degree || piv.vector.coefficient(c) != rpow(Rational(p), piv.exponent))
      throw std::invalid_argument("full_from_pivots: malformed pivot at " + c.str(*basis->alphabet()));
    basis->set_pivot(c, std::move(piv));
  }
  return basis;
}

bool LatticeBasis::preload_full(std::shared_ptr<const LatticeBasis> basis) {
  FullCache& fc = full_cache();
  std::lock_guard<std::mutex> lock(fc.mu);
  return fc.entries.emplace(std::make_pair(basis->prime(), basis->degree()), std::move(basis)).second;
}

bool LatticeBasis::has_full(unsigned p, int degree) {
  FullCache& fc = full_cache();
  std::lock_guard<std::mutex> lock(fc.mu);
  return fc.entries.count(std::make_pair(p, degree)) > 0;
}

std::shared_ptr<const LatticeBasis> LatticeBasis::full(unsigned p, int degree) {
  FullCache& fc = full_cache();
  std::lock_guard<std::mutex> lock(fc.mu);
  auto key = std::make_pair(p, degree);
  auto it = fc.entries.find(key);
  if (it != fc.entries.end()) return it->second;

  const BPContext& bp = BPContext::get(p);
  auto basis = empty_full(p, degree);
  // Monomials v^a t^b with a, b nonzero give a triangular system; pure t^b come afterwards.
  std::vector<RPoly> extras;
  for (const auto& m : bp.gamma_monomials(degree)) {
    bool has_v = !bp.uses_only(m, {3}), has_t = !bp.uses_only(m, {2});
    if (!has_t) continue;
    RPoly img = bp.phi_inverse_monomial(m);
    if (has_v) {
      basis->insert(img);
    } else {
      extras.push_back(std::move(img));
    }
  }
  for (const auto& e : extras) basis->insert(e);
  return fc.entries.emplace(key, basis).first->second;
}

std::shared_ptr<const LatticeBasis> LatticeBasis::kervaire_quotient(int degree) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const LatticeBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;

  const BPContext& bp = BPContext::get(2);
  std::size_t l1 = bp.vL(1), l2 = bp.vL(2), r1 = bp.vR(1);
  auto in_sub = [l1, l2, r1](const Monomial& m) {
    for (std::size_t g = 0; g < kMaxGenerators; ++g)
      if (m[g] && g != l1 && g != l2 && g != r1) return false;
    return true;
  };
  auto basis = std::make_shared<LatticeBasis>(2, degree, bp.alphabet(), [&bp, in_sub](const Monomial& m) {
    return in_sub(m) && !bp.is_pure_tensor(m);
  });
  std::vector<RPoly> extras;
  int d1 = bp.generator_degree(1), d2 = bp.generator_degree(2);
  for (int j = 0; j * d2 <= degree; ++j) {
    for (int k = 1; j * d2 + k * d1 <= degree; ++k) {
      int rest = degree - j * d2 - k * d1;
      if (rest % d1) continue;
      int i = rest / d1;
      RPoly g = bp.gen(bp.v(1), static_cast<unsigned>(i)) * bp.gen(bp.v(2), static_cast<unsigned>(j)) *
                bp.gen(bp.t(1), static_cast<unsigned>(k));
      RPoly img = bp.phi_inverse(g);
      if (i + j > 0) {
        basis->insert(img);
      } else {
        extras.push_back(std::move(img));
      }
    }
  }
  for (const auto& e : extras) basis->insert(e);
  return cache.emplace(degree, basis).first->second;
}

std::string TensorCoset::str() const {
  return "[" + representative.str() + "] (order " + std::to_string(prime) + "^" + std::to_string(order_exponent) +
         ")";
}

TensorCoset make_coset(const RPoly& x, std::shared_ptr<const LatticeBasis> lattice) {
  if (!x.is_zero() && (!x.is_homogeneous() || x.degree() != lattice->degree()))
    throw std::invalid_argument("coset: element is not homogeneous of degree " + std::to_string(lattice->degree()));
  TensorCoset out;
  out.prime = lattice->prime();
  out.degree = lattice->degree();
  out.representative = lattice->reduce(x);
  if (!out.representative.alphabet()) out.representative = RPoly(lattice->alphabet());
  Rational scale(1);
  RPoly cur = out.representative;
  while (!cur.is_zero()) {
    if (++out.order_exponent > kMaxOrderExponent)
      throw std::domain_error("coset has no finite p-power order (a coordinate lacks a pivot)");
    scale *= lattice->prime();
    cur = lattice->reduce(out.representative * scale);
  }
  out.lattice = std::move(lattice);
  return out;
}

TensorCoset coset_reduce(const RPoly& x, unsigned p, int degree) {
  const BPContext& bp = BPContext::get(p);
  if (!bp.is_tensor_polynomial(x)) throw std::invalid_argument("coset_reduce: element is not in the tensor square");
  return make_coset(x, LatticeBasis::full(p, degree));
}

TensorCoset kervaire_reduce(const RPoly& x, int degree) {
  auto lattice = LatticeBasis::kervaire_quotient(degree);
  const BPContext& bp = BPContext::get(2);
  for (const auto& [m, c] : x.terms())
    if (!bp.is_pure_tensor(m) && !lattice->is_coordinate(m))
      throw std::invalid_argument("kervaire_reduce: monomial " + m.str(*bp.alphabet()) +
                                  " lies outside the span of vL1, vL2, vR1");
  return make_coset(x, std::move(lattice));
}

TensorCoset operator+(const TensorCoset& a, const TensorCoset& b) {
  if (a.lattice != b.lattice) throw std::invalid_argument("coset addition across different lattices");
  return make_coset(a.representative + b.representative, a.lattice);
}

TensorCoset operator*(const Rational& c, const TensorCoset& a) {
  if (!is_p_integral(c, a.prime)) throw std::invalid_argument("coset scaling by a non-p-integral scalar");
  return make_coset(a.representative * c, a.lattice);
}

}  // namespace fbeta
