#pragma once

#include <string>

#include "fbeta/polynomial.hpp"

namespace fbeta {

// Parses sums of terms like "3/4*v1^2*t1 - v2 + 1/2" over the given alphabet.
// Parentheses and implicit multiplication are not supported.
RPoly parse_polynomial(const std::string& text, const AlphabetPtr& alpha);

}  // namespace fbeta
