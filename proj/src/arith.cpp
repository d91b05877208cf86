#include "hzbound/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hzbound::arith {

BoundConstants BoundConstants::standard() {
    double eg = std::exp(kGamma);
    return BoundConstants{kGamma, std::numbers::pi / (12.0 * eg), eg + 0.6482, false};
}

BoundConstants BoundConstants::riemann() {
    BoundConstants b = standard();
    b.delta = 2.0 * b.delta;  // pi/(6 e^gamma), exactly twice the standard value
    b.c = std::exp(kGamma);
    b.rh_mode = true;
    return b;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(std::int64_t n, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("legendre: p must be an odd prime");
    std::int64_t r = n % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r),
                              static_cast<std::uint64_t>((p - 1) / 2),
                              static_cast<std::uint64_t>(p));
    return e == 1 ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: argument must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t sigma(int order, std::int64_t n) {
    if (order != 0 && order != 1) throw std::invalid_argument("sigma: order must be 0 or 1");
    if (n < 1) return 0;
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += order == 0 ? 1 : d;
            if (d != n / d) s += order == 0 ? 1 : n / d;
        }
    }
    return s;
}

std::int64_t sigma(int order, const Rational& x) {
    if (order != 0 && order != 1) throw std::invalid_argument("sigma: order must be 0 or 1");
    if (x.get_den() != 1 || sgn(x) <= 0) return 0;
    if (!x.get_num().fits_slong_p()) throw std::invalid_argument("sigma: argument too large");
    return sigma(order, static_cast<std::int64_t>(x.get_num().get_si()));
}

std::vector<std::int64_t> sigma1_table(std::int64_t limit) {
    if (limit < 0) throw std::invalid_argument("sigma1_table: negative limit");
    std::vector<std::int64_t> t(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t d = 1; d <= limit; ++d)
        for (std::int64_t m = d; m <= limit; m += d) t[static_cast<std::size_t>(m)] += d;
    return t;
}

namespace {

std::vector<std::int64_t> sqrt_mod_enumerate(std::int64_t a, std::int64_t p) {
    std::vector<std::int64_t> roots;
    for (std::int64_t x = 0; x < p; ++x)
        if ((x * x - a) % p == 0) roots.push_back(x);
    return roots;
}

std::int64_t tonelli_shanks(std::int64_t a, std::int64_t p) {
    auto up = static_cast<std::uint64_t>(p);
    auto ua = static_cast<std::uint64_t>(a);
    if (p % 4 == 3) {
        return static_cast<std::int64_t>(pow_mod(ua, (up + 1) / 4, up));
    }
    std::uint64_t q = up - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (up - 1) / 2, up) != up - 1) ++z;
    std::uint64_t m = static_cast<std::uint64_t>(s);
    std::uint64_t c = pow_mod(z, q, up);
    std::uint64_t t = pow_mod(ua, q, up);
    std::uint64_t r = pow_mod(ua, (q + 1) / 2, up);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, up);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, up);
        m = i;
        c = mul_mod(b, b, up);
        t = mul_mod(t, c, up);
        r = mul_mod(r, b, up);
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

std::vector<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("sqrt_mod: p must be an odd prime");
    std::int64_t r = a % p;
    if (r < 0) r += p;
    if (p < kSqrtModEnumLimit) return sqrt_mod_enumerate(r, p);
    if (r == 0) return {0};
    if (legendre(r, p) != 1) return {};
    std::int64_t x = tonelli_shanks(r, p);
    std::vector<std::int64_t> roots{x, p - x};
    std::sort(roots.begin(), roots.end());
    return roots;
}

double loglog(double x) {
    if (!(x > 1.0)) throw std::domain_error("loglog: argument must be > 1");
    return std::log(std::log(x));
}

}  // namespace hzbound::arith
