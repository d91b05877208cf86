#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <string>

namespace hzbound {

// All class-number formula values are exact fractions; mpq_class keeps them
// canonical (lowest terms, positive denominator) through arithmetic.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

/// "num/den", with "/den" omitted when the denominator is 1.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Shortest decimal with 12 significant digits.
inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace hzbound
