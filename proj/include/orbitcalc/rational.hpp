#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbitcalc {

// Arbitrary-precision rational; gmp keeps every arithmetic result canonical
// (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a", "-a", "a/b" with optional surrounding whitespace. Both the
// ASCII hyphen and U+2212 are accepted as the minus sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace orbitcalc
