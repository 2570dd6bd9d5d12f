#include "fbeta/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace fbeta {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

void parse_term(const std::string& term, bool negative, const AlphabetPtr& alpha, TermAccumulator<Rational>& acc) {
  if (term.empty()) throw std::invalid_argument("empty term");
  Rational coeff = negative ? -1 : 1;
  Monomial m;
  std::size_t pos = 0;
  while (pos <= term.size()) {
    std::size_t star = term.find('*', pos);
    std::string factor = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (factor.empty()) throw std::invalid_argument("malformed term: " + term);
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      coeff *= parse_rational(factor);
    } else {
      std::size_t caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      unsigned e = 1;
      if (caret != std::string::npos) {
        std::string es = factor.substr(caret + 1);
        if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("bad exponent in " + factor);
        e = static_cast<unsigned>(std::stoul(es));
      }
      std::size_t g = alpha->index(name);
      m.set(*alpha, g, m[g] + e);
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  acc.add(m, coeff);
}

}  // namespace

RPoly parse_polynomial(const std::string& text, const AlphabetPtr& alpha) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  TermAccumulator<Rational> acc(alpha);
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    bool end = i == s.size();
    if (end || ((s[i] == '+' || s[i] == '-') && i > start && s[i - 1] != '^')) {
      std::string term = s.substr(start, i - start);
      if (term == "0") {
        if (!end) {
          negative = s[i] == '-';
          start = i + 1;
        }
        continue;
      }
      parse_term(term, negative, alpha, acc);
      if (!end) {
        negative = s[i] == '-';
        start = i + 1;
      }
    }
  }
  return std::move(acc).finish();
}

}  // namespace fbeta
