#pragma once

#include <gmpxx.h>

#include <string>

#include "genflag/errors.hpp"

namespace genflag {

/// Exact rational scalar. GMP keeps the canonical form (gcd(|num|, den) = 1,
/// den > 0) through all arithmetic.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    require(den != 0, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw bad_input("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0) throw bad_input("bad rational literal: " + text);
    require(q.get_den() != 0, "rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace genflag
