#pragma once

#include <cstdint>

#include "hzbound/rational.hpp"

namespace hzbound::quadfield {

// Exact element a + b*sqrt(p) of the real quadratic field Q(sqrt(p)).
// Arithmetic, conjugation and sign tests are all rational, so unit orbits
// and window comparisons never go through floating point.
struct QuadElement {
    Rational a;
    Rational b;
    std::int64_t p;

    QuadElement(Rational a_, Rational b_, std::int64_t p_)
        : a(std::move(a_)), b(std::move(b_)), p(p_) {}

    QuadElement conjugate() const { return {a, -b, p}; }
    Rational norm() const { return a * a - b * b * make_rational(p); }
    Rational trace() const { return a + a; }

    /// Sign of a + b*sqrt(p): -1, 0, or +1, decided exactly.
    int sign() const;
    bool is_totally_positive() const;

    double to_double() const;

    QuadElement operator*(const QuadElement& o) const;
    QuadElement operator+(const QuadElement& o) const;
    QuadElement operator-(const QuadElement& o) const;
    bool operator==(const QuadElement& o) const { return p == o.p && a == o.a && b == o.b; }

    /// Exact comparison with a rational r: sign of (*this - r).
    int compare(const Rational& r) const;
};

struct FundamentalUnit {
    QuadElement eps;       // fundamental unit > 1 of Z[(1+sqrt(p))/2]
    int norm;              // +1 or -1
    QuadElement eps_plus;  // smallest totally positive unit > 1
};

/// Fundamental unit of the ring of integers of Q(sqrt(p)) for a prime
/// p = 1 (mod 4), from the continued-fraction expansion of (1+sqrt(p))/2.
/// Throws std::invalid_argument unless p is a prime = 1 (mod 4).
FundamentalUnit fundamental_unit(std::int64_t p);

}  // namespace hzbound::quadfield
