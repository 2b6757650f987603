#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace assoc {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws ParseError on malformed input and
/// DivisionByZero on a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace assoc
