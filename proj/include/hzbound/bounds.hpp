#pragma once

#include <cstdint>

#include "hzbound/arith.hpp"
#include "hzbound/rational.hpp"

namespace hzbound::bounds {

using arith::BoundConstants;

/// Paley's class-number lower bound surrogate pi/(24 e^gamma) sqrt(d)/loglog d.
/// Domain d >= 3.
double paley_lower(double d);

struct RobinBound {
    double two_term;  // e^gamma N loglog N + 0.6483 N / loglog N
    double merged;    // (e^gamma + 0.6482) N loglog N
};

/// Robin's unconditional divisor-sum bound for N >= 3. The two-term form
/// carries Robin's constant 0.6483 (tight at N = 12); the merged form is the
/// weaker single product used downstream, and only dominates the two-term
/// form once loglog N >= 1.
RobinBound robin_upper(std::int64_t N);

/// Sum of paley_lower(x/d^2) over square divisors of an integer x; for a
/// non-integer rational the divisor structure is empty and only the direct
/// surrogate paley_lower(x) remains. Throws std::domain_error naming the
/// term whenever some argument drops below 3.
double paley_lower_sum(const Rational& x);

// Successive lower bounds for the interior class-number sum at n^2: a sum of
// Paley surrogates at worst-case residues, its linearized form, and the
// closed-form evaluation. rhs1 >= rhs2 >= rhs3 whenever the sum is nonempty
// and every surrogate argument is in domain.
struct ChainBounds {
    double rhs1;
    double rhs2;
    double rhs3;
};

ChainBounds interior_sum_chain(std::int64_t p, std::int64_t n);

enum class TnLowerVariant {
    statement,  // coefficient N*delta / (sqrt(p) loglog(4N^2))
    proof,      // same divided by 6
};

/// Analytic lower bound for the compact self-intersection number:
/// -(1/6) c N loglog N + Coef * (2N/(3p) - 1 + 1/p).
double self_intersection_lower(std::int64_t p, std::int64_t N, TnLowerVariant variant,
                               const BoundConstants& constants = BoundConstants::standard());

/// epsilon(p) = logloglog(p) / log(p); domain requires loglog p > 1 (p >= 16).
double epsilon_of(std::int64_t p);

/// Scan-cutoff exponent threshold 3/(2(1-eps)) (statement) or 3/(2(1-3eps))
/// (proof); domain eps < 1 resp. eps < 1/3.
double k_threshold(double eps, TnLowerVariant variant);

/// Quadratic model t(N) of the lower bound with loglog terms frozen at
/// p^{k eps}, its derivative, the exact argmin, and the published variant of
/// the argmin whose linear correction enters with the opposite sign.
double model_t(std::int64_t p, double N, double keps,
               const BoundConstants& constants = BoundConstants::standard());
double model_t_deriv(std::int64_t p, double N, double keps,
                     const BoundConstants& constants = BoundConstants::standard());
double model_argmin(std::int64_t p, double keps,
                    const BoundConstants& constants = BoundConstants::standard());
double model_argmin_published(std::int64_t p, double keps,
                              const BoundConstants& constants = BoundConstants::standard());

/// Asymptotic negativity floor -(1/96)(c^2/delta) p^{3/2}; keps reinstates
/// the p^{4 k eps} factor for finite-p reporting.
double asymptotic_floor(std::int64_t p,
                        const BoundConstants& constants = BoundConstants::standard(),
                        double keps = 0.0);

}  // namespace hzbound::bounds
