#pragma once

#include <cstdint>
#include <vector>

#include "hzbound/classnum.hpp"
#include "hzbound/quadfield.hpp"
#include "hzbound/rational.hpp"

namespace hzbound::curves {

// Ambient data of a Hilbert modular surface scan: the prime p = 1 (mod 4)
// and the norm A of the ideal defining the congruence group.
struct HzParams {
    std::int64_t p;
    std::int64_t A;

    explicit HzParams(std::int64_t p, std::int64_t A = 1);
};

/// Sum of Hurwitz class numbers H((4n - x^2)/p) over integers x with
/// x^2 <= 4n and x^2 = 4n (mod p).
Rational class_number_sum(const HzParams& params, std::int64_t n,
                          classnum::ClassNumberCache& cache);

/// Same sum restricted to x^2 < 4n; every summand is >= 0.
Rational class_number_sum_interior(const HzParams& params, std::int64_t n,
                                   classnum::ClassNumberCache& cache);

/// 12 times class_number_sum, as an integer (fast path used by scans).
std::int64_t class_number_sum12(const HzParams& params, std::int64_t n,
                                classnum::ClassNumberCache& cache, bool interior = false);

/// (1/sqrt(p)) * sum of min(lambda, lambda') over totally positive lambda
/// with lambda*lambda' = n. The solution set is a finite union of orbits
/// under the totally positive fundamental unit; each orbit contributes a
/// geometric series, truncated so the absolute error stays below tol.
double unit_orbit_sum(const HzParams& params, std::int64_t n, double tol = 1e-10);

/// Orbit representatives of the lambda enumeration, i.e. all totally
/// positive lambda with lambda*lambda' = n and n <= lambda^2 < n*eps_+^2.
std::vector<quadfield::QuadElement> unit_orbit_representatives(const HzParams& params,
                                                               std::int64_t n);

/// True iff chi_p(N*A) != -1, i.e. the curve family T_N is nonempty.
bool is_eligible(const HzParams& params, std::int64_t N);

/// Self-intersection number T_N^2 in compact mode (class-number part only),
/// exact: (1/2) sum over n | N of n * H_p(N^2/n^2) * (chi_p(n) + chi_p(NA/n)).
/// Throws EligibilityError for ineligible N and std::invalid_argument for
/// non-squarefree N unless allow_non_squarefree is set.
Rational self_intersection(const HzParams& params, std::int64_t N,
                           classnum::ClassNumberCache& cache,
                           bool allow_non_squarefree = false);

/// Full formula including the unit-orbit terms; absolute error <= tol from
/// the orbit-series truncation.
double self_intersection_full(const HzParams& params, std::int64_t N,
                              classnum::ClassNumberCache& cache, double tol = 1e-10,
                              bool allow_non_squarefree = false);

/// All squarefree N <= n_max that are products of distinct primes q with
/// chi_p(q) = 1, ascending. N = 1 (the empty product) only with include_one.
std::vector<std::int64_t> split_prime_products(std::int64_t p, std::int64_t n_max,
                                               bool include_one = false);

bool is_squarefree(std::int64_t n);

}  // namespace hzbound::curves
