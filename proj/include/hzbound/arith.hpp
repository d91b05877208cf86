#pragma once

#include <cstdint>
#include <vector>

#include "hzbound/rational.hpp"

namespace hzbound::arith {

/// Euler-Mascheroni constant.
inline constexpr double kGamma = 0.5772156649015329;

// The constants entering the divisor-sum and class-number estimates.
// In the standard mode delta = pi/(12 e^gamma) and c = e^gamma + 0.6482;
// the Riemann-Hypothesis variant doubles delta and drops the additive
// constant from c.
struct BoundConstants {
    double gamma;
    double delta;
    double c;
    bool rh_mode;

    static BoundConstants standard();
    static BoundConstants riemann();
};

/// Floor of sqrt(n) for n >= 0, exact.
std::int64_t isqrt(std::int64_t n);

/// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Legendre symbol (n/p). Throws std::invalid_argument unless p is an odd prime.
int legendre(std::int64_t n, std::int64_t p);

/// Divisors of n in ascending order. Throws std::invalid_argument for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// sigma_k(n) = sum of d^k over divisors d of n, for k in {0, 1}.
/// Returns 0 when n < 1, matching the convention used for rational arguments.
std::int64_t sigma(int order, std::int64_t n);

/// Convention for rational arguments: 0 unless x is a positive integer.
std::int64_t sigma(int order, const Rational& x);

/// sigma_1(n) for all 0 <= n <= limit in one sieve pass (entry 0 is 0).
std::vector<std::int64_t> sigma1_table(std::int64_t limit);

/// All x in [0, p) with x^2 = a (mod p), ascending. p must be an odd prime.
/// Residue enumeration below kSqrtModEnumLimit, Tonelli-Shanks above.
std::vector<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p);

inline constexpr std::int64_t kSqrtModEnumLimit = 10000;

/// log(log(x)); throws std::domain_error for x <= 1.
double loglog(double x);

}  // namespace hzbound::arith
