#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aq {

// Exact coefficient field. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through from_parts/parse.
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace aq
