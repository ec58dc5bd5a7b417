#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace simbasis {

// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation, so value equality is representation
// equality.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Accepts "p/q" or an integer string with an optional sign. Throws InputError
// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline int sign_of(const Rational& value) { return sgn(value); }

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace simbasis
