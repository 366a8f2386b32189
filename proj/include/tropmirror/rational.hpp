#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropmirror {

// Exact rational scalar. gmpxx keeps every result canonical (lowest terms,
// positive denominator) as long as values are built through make_rational
// or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p/q" or "p". Throws PreconditionError on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

// Always "p/q", including "9/1" for integers.
std::string to_string(const Rational& value);

bool is_reduced(const Rational& value);

Integer factorial(unsigned long n);
Rational binomial(const Rational& top, unsigned long k);

}  // namespace tropmirror
