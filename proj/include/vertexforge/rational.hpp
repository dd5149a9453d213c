#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vertexforge {

// Exact rational scalar. All engine arithmetic goes through this alias so the
// bignum backend stays swappable; gmpxx keeps values canonical (lowest terms,
// positive denominator) under the class operators.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q" with an optional leading sign on p.
Rational rat_parse(const std::string& text);

// Renders as "p" or "p/q"; the denominator is omitted when it equals 1.
std::string rat_str(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational binomial(long n, long k);  // C(n,k) for any integer n, k >= 0

}  // namespace vertexforge
