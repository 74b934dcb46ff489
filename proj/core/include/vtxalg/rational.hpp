#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vtx {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

// Accepts "p" or "p/q" in lowest terms with q > 0; anything else throws
// ParseError.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &r);

// Generalized binomial coefficient n(n-1)...(n-i+1)/i! for any integer n.
Rational binomial(long n, long i);

Rational factorial(long n);

} // namespace vtx
