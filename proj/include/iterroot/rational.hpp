#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace iterroot {

/// Exact rational number. GMP's mpq_class already maintains the canonical
/// form this project relies on: denominator > 0 and gcd(|num|, den) = 1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);

/// The unique real rational k-th root of `x`, when it exists.
/// k even: requires x >= 0 and returns the nonnegative root.
/// k odd: the sign of the root follows the sign of x.
std::optional<Rational> rational_kth_root(const Rational& x, unsigned k);

/// Converts to double (GMP rounds to nearest).
inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace iterroot
