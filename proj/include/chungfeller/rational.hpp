#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cf {

// Exact rational number. Every weight, table cell and series coefficient
// in the library is one of these; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" into canonical form. Throws std::invalid_argument
// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q" with q > 1, or plain "p" for integers.
std::string to_string(const Rational& value);

Rational binomial(unsigned long n, unsigned long k);

}  // namespace cf
