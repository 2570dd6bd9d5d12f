#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fbeta {

inline constexpr std::size_t kMaxGenerators = 32;

// Ordered list of graded generators. Index order is precedence order: later
// generators dominate in the monomial order.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> names, std::vector<int> degrees);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }

  bool same_as(const Alphabet& other) const {
    return names_ == other.names_ && degrees_ == other.degrees_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees);

// Throws unless a and b are the same alphabet; null alphabets are compatible with anything.
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
bool alphabets_equal(const AlphabetPtr& a, const AlphabetPtr& b);

struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> e{};
  std::int32_t deg = 0;

  static Monomial generator(const Alphabet& a, std::size_t i, unsigned power = 1);
  static Monomial from_exponents(const Alphabet& a, const std::vector<unsigned>& exps);

  unsigned operator[](std::size_t i) const { return e[i]; }
  void set(const Alphabet& a, std::size_t i, unsigned power);
  bool is_one() const;
  unsigned total_exponent() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(unsigned k) const;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.e == y.e; }
  friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

  std::string str(const Alphabet& a) const;
};

// Graded lexicographic: topological degree first, then exponents compared from
// the highest-precedence generator downwards.
int compare(const Monomial& x, const Monomial& y);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct MonomialGreater {
  bool operator()(const Monomial& x, const Monomial& y) const { return compare(x, y) > 0; }
};

// All monomials of the given topological degree in the generators listed.
std::vector<Monomial> monomials_of_degree(const Alphabet& a, const std::vector<std::size_t>& gens,
                                          int degree);

}  // namespace fbeta
