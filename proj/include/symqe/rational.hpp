#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symqe {

// Every scalar in a decision path is an exact, canonical GMP rational.
using Rational = mpq_class;

// Parses "p" or "p/q" (optional leading sign on p, q > 0). Surrounding
// whitespace is ignored. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace symqe
