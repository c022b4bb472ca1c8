#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lefschetz {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Parses "n", "-n" or "p/q" (decimal). Throws PreconditionError on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer parse_integer(std::string_view text);

/// num/den in lowest terms with a positive denominator; den must be nonzero.
/// (mpq_class's two-argument constructor does not canonicalize.)
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// True when the denominator is 1.
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Decimal rendering: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace lefschetz
