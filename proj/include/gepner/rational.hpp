#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gepner {

/// Exact rational number; always kept in canonical form (den > 0, gcd = 1).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p" for integers.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Rational binomial(long n, long k);

/// a/b in canonical form.
Rational frac(long a, long b);

} // namespace gepner
