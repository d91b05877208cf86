#include "hzbound/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hzbound/arith.hpp"
#include "hzbound/errors.hpp"

namespace hzbound::curves {

using arith::isqrt;
using arith::legendre;
using quadfield::QuadElement;

HzParams::HzParams(std::int64_t p_, std::int64_t A_) : p(p_), A(A_) {
    if (p < 5 || p % 4 != 1 || !arith::is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("p must be a prime = 1 (mod 4), got " + std::to_string(p));
    if (A < 1) throw std::invalid_argument("A must be >= 1");
}

std::int64_t class_number_sum12(const HzParams& params, std::int64_t n,
                                classnum::ClassNumberCache& cache, bool interior) {
    if (n < 1) throw std::invalid_argument("class_number_sum: n must be >= 1");
    const std::int64_t p = params.p;
    const std::int64_t four_n = 4 * n;
    const std::int64_t m = isqrt(four_n);
    std::int64_t total = 0;
    for (std::int64_t r : arith::sqrt_mod(four_n % p, p)) {
        // x runs over the residue class r (mod p) inside [-m, m]
        std::int64_t x = -m + (((r + m) % p + p) % p);
        for (; x <= m; x += p) {
            std::int64_t x2 = x * x;
            if (interior && x2 == four_n) continue;
            total += cache.hurwitz12((four_n - x2) / p);
        }
    }
    return total;
}

Rational class_number_sum(const HzParams& params, std::int64_t n,
                          classnum::ClassNumberCache& cache) {
    return make_rational(class_number_sum12(params, n, cache, false), 12);
}

Rational class_number_sum_interior(const HzParams& params, std::int64_t n,
                                   classnum::ClassNumberCache& cache) {
    return make_rational(class_number_sum12(params, n, cache, true), 12);
}

std::vector<QuadElement> unit_orbit_representatives(const HzParams& params, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("unit_orbit_representatives: n must be >= 1");
    const std::int64_t p = params.p;
    auto unit = quadfield::fundamental_unit(p);
    // Window n <= lambda^2 < n * eps_+^2 picks one representative per orbit.
    QuadElement window_hi = unit.eps_plus * unit.eps_plus;  // compare lambda^2 / n against this
    std::vector<QuadElement> reps;
    const std::int64_t four_n = 4 * n;
    const QuadElement window_4n =
        window_hi * QuadElement(make_rational(four_n), Rational(0), p);
    const QuadElement window_n = window_hi * QuadElement(make_rational(n), Rational(0), p);
    for (std::int64_t u = isqrt(four_n - 1) + 1;; ++u) {
        // every lambda with this trace satisfies lambda >= u/2; stop once
        // u^2/4 >= n*eps_+^2, i.e. u^2 >= 4n*eps_+^2
        if ((QuadElement(make_rational(u * u), Rational(0), p) - window_4n).sign() >= 0) break;
        std::int64_t w = u * u - four_n;
        if (w % p != 0) continue;
        std::int64_t v2 = w / p;
        std::int64_t v = isqrt(v2);
        if (v * v != v2 || (u - v) % 2 != 0) continue;
        QuadElement lambda(make_rational(u, 2), make_rational(v, 2), p);
        // n <= lambda^2 holds by construction (u >= 2*sqrt(n), v >= 0)
        if ((lambda * lambda - window_n).sign() < 0) reps.push_back(lambda);
    }
    return reps;
}

double unit_orbit_sum(const HzParams& params, std::int64_t n, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("unit_orbit_sum: tol must be > 0");
    auto reps = unit_orbit_representatives(params, n);
    if (reps.empty()) return 0.0;
    auto unit = quadfield::fundamental_unit(params.p);
    const double eps = unit.eps_plus.to_double();
    // Each truncated tail is bounded by term*eps/(eps-1); split tol across
    // the 2*reps.size() tails with a safety factor.
    const double cutoff =
        tol * (eps - 1.0) / (eps * 2.0 * static_cast<double>(2 * reps.size()));
    double total = 0.0;
    for (const auto& lambda : reps) {
        double lam = lambda.to_double();
        double lam_conj = lambda.conjugate().to_double();
        // min over the orbit: conj side for k >= 0, lambda side for k <= -1
        for (double t = lam_conj; t >= cutoff; t /= eps) total += t;
        for (double t = lam / eps; t >= cutoff; t /= eps) total += t;
    }
    return total / std::sqrt(static_cast<double>(params.p));
}

bool is_eligible(const HzParams& params, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("is_eligible: N must be >= 1");
    std::int64_t na = ((N % params.p) * (params.A % params.p)) % params.p;
    return legendre(na, params.p) != -1;
}

bool is_squarefree(std::int64_t n) {
    if (n < 1) return false;
    if (n % 4 == 0) return false;
    for (std::int64_t q = 3; q * q <= n; q += 2)
        if (n % (q * q) == 0) return false;
    return true;
}

namespace {

void check_scan_args(const HzParams& params, std::int64_t N, bool allow_non_squarefree) {
    if (N < 1) throw std::invalid_argument("self_intersection: N must be >= 1");
    if (!is_eligible(params, N))
        throw EligibilityError("N = " + std::to_string(N) +
                               " is not eligible: chi_p(N*A) = -1, the curve family is empty");
    if (!allow_non_squarefree && !is_squarefree(N))
        throw std::invalid_argument("N = " + std::to_string(N) +
                                    " is not squarefree; pass the override to evaluate anyway");
}

}  // namespace

Rational self_intersection(const HzParams& params, std::int64_t N,
                           classnum::ClassNumberCache& cache, bool allow_non_squarefree) {
    check_scan_args(params, N, allow_non_squarefree);
    std::int64_t acc24 = 0;  // 24ths: the 1/2 prefactor over twelfths
    for (std::int64_t n : arith::divisors(N)) {
        std::int64_t chi = legendre(n, params.p) +
                           legendre(((N / n % params.p) * (params.A % params.p)) % params.p,
                                    params.p);
        if (chi == 0) continue;
        std::int64_t m = N / n;
        acc24 += n * chi * class_number_sum12(params, m * m, cache);
    }
    return make_rational(acc24, 24);
}

double self_intersection_full(const HzParams& params, std::int64_t N,
                              classnum::ClassNumberCache& cache, double tol,
                              bool allow_non_squarefree) {
    check_scan_args(params, N, allow_non_squarefree);
    auto divs = arith::divisors(N);
    double total = 0.0;
    const double term_tol = tol / static_cast<double>(divs.size());
    for (std::int64_t n : divs) {
        std::int64_t chi = legendre(n, params.p) +
                           legendre(((N / n % params.p) * (params.A % params.p)) % params.p,
                                    params.p);
        if (chi == 0) continue;
        std::int64_t m = N / n;
        double weight = 0.5 * static_cast<double>(n * chi);
        double hp = static_cast<double>(class_number_sum12(params, m * m, cache)) / 12.0;
        double ip = unit_orbit_sum(params, m * m, term_tol / std::fabs(weight));
        total += weight * (hp + ip);
    }
    return total;
}

std::vector<std::int64_t> split_prime_products(std::int64_t p, std::int64_t n_max,
                                               bool include_one) {
    HzParams validated(p);
    (void)validated;
    if (n_max < 1) throw std::invalid_argument("split_prime_products: n_max must be >= 1");
    std::vector<bool> composite(static_cast<std::size_t>(n_max) + 1, false);
    std::vector<std::int64_t> split;
    for (std::int64_t q = 2; q <= n_max; ++q) {
        if (composite[static_cast<std::size_t>(q)]) continue;
        for (std::int64_t m = q * q; m <= n_max; m += q) composite[static_cast<std::size_t>(m)] = true;
        if (legendre(q, p) == 1) split.push_back(q);
    }
    std::vector<std::int64_t> out;
    if (include_one) out.push_back(1);
    // depth-first products of distinct split primes
    std::vector<std::pair<std::size_t, std::int64_t>> stack;
    for (std::size_t i = 0; i < split.size(); ++i) stack.emplace_back(i, split[i]);
    while (!stack.empty()) {
        auto [idx, prod] = stack.back();
        stack.pop_back();
        out.push_back(prod);
        for (std::size_t j = idx + 1; j < split.size(); ++j) {
            if (prod > n_max / split[j]) break;
            stack.emplace_back(j, prod * split[j]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hzbound::curves
