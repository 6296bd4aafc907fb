#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cdual {

// Exact rational numbers, always kept canonical (reduced, positive
// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.125".
// Throws ParameterError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" with the "/q" dropped when q = 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);
Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

// Converts to int64, throwing ParameterError if it does not fit.
std::int64_t to_int64(const Integer& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

// True when value = w^2 for some rational w; stores w >= 0 in root.
bool rational_sqrt(const Rational& value, Rational& root);

// Integer power.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace cdual
