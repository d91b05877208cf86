#include "hzbound/quadfield.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hzbound/arith.hpp"

namespace hzbound::quadfield {

int QuadElement::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: the sign is decided by a^2 against p*b^2.
    int c = cmp(a * a, b * b * make_rational(p));
    if (c == 0) return 0;  // cannot happen for prime p, kept for totality
    return sa > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

bool QuadElement::is_totally_positive() const { return sign() > 0 && conjugate().sign() > 0; }

double QuadElement::to_double() const { return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(p)); }

QuadElement QuadElement::operator*(const QuadElement& o) const {
    return {a * o.a + b * o.b * make_rational(p), a * o.b + b * o.a, p};
}

QuadElement QuadElement::operator+(const QuadElement& o) const { return {a + o.a, b + o.b, p}; }
QuadElement QuadElement::operator-(const QuadElement& o) const { return {a - o.a, b - o.b, p}; }

int QuadElement::compare(const Rational& r) const { return QuadElement(a - r, b, p).sign(); }

FundamentalUnit fundamental_unit(std::int64_t p) {
    if (p < 5 || p % 4 != 1 || !arith::is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("fundamental_unit: p must be a prime = 1 (mod 4), got " +
                                    std::to_string(p));
    // Continued-fraction expansion of (1 + sqrt(p))/2 via the P,Q recurrence;
    // the first return of Q to 2 closes the period and G^2 - p B^2 = +-4.
    const std::int64_t s = arith::isqrt(p);
    std::int64_t P = 1, Q = 2;
    mpz_class g_prev(-1), g_cur(2);  // G_{-2} = -P0, G_{-1} = Q0
    mpz_class b_prev(1), b_cur(0);   // B_{-2} = 1,   B_{-1} = 0
    for (int iter = 0; iter < 1'000'000; ++iter) {
        std::int64_t ai = (P + s) / Q;  // floor((P + sqrt(p)) / Q), Q > 0
        mpz_class g_next = ai * g_cur + g_prev;
        mpz_class b_next = ai * b_cur + b_prev;
        g_prev = g_cur;
        g_cur = g_next;
        b_prev = b_cur;
        b_cur = b_next;
        P = ai * Q - P;
        Q = (p - P * P) / Q;
        if (Q == 2) {
            Rational ga(g_cur), ba(b_cur);
            QuadElement eps(ga / 2, ba / 2, p);
            Rational n = eps.norm();
            int norm = n == 1 ? 1 : -1;
            QuadElement eps_plus = norm == 1 ? eps : eps * eps;
            return FundamentalUnit{eps, norm, eps_plus};
        }
    }
    throw std::logic_error("fundamental_unit: period not found");
}

}  // namespace hzbound::quadfield
