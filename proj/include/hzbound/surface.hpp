#pragma once

#include <cstdint>

#include "hzbound/rational.hpp"

namespace hzbound::surface {

// Chern data of the surface; d2 = 3*c2 - K^2 is the combination all the
// negativity bounds are phrased in.
struct SurfaceData {
    double c2;
    double ksq;
    double d2;

    SurfaceData(double c2_, double ksq_) : c2(c2_), ksq(ksq_), d2(3.0 * c2_ - ksq_) {}
};

// Numerical curve data; synthetic fixtures are fine, the bounds below are
// algebraic identities and inequalities in these numbers.
struct CurveData {
    double csq;  // C^2
    double kc;   // K_X . C
    std::int64_t g;
    double sc = 0.0;   // S . C
    double rho = 0.0;  // rho(C)
};

/// Arithmetic-minus-geometric genus difference (1/2)(K.C + C^2 - 2g + 2).
double delta_of(const CurveData& curve);

/// Left-hand side of the Miyaoka inequality
/// (alpha^2/2)(C^2 + 3 C.K - 6g + 6) - 2 alpha (C.K - 3g + 3) + 3c2 - K^2,
/// nonnegative for surfaces of nonnegative Kodaira dimension, alpha in [0,1].
double miyaoka_lhs(double alpha, const CurveData& curve, const SurfaceData& surface);

/// The alpha-quadratic after genus substitution and proportionality:
/// P(alpha) = alpha^2 (3 delta - C^2) + alpha (C^2 - S.C - rho - 2 delta) + d2.
double alpha_form(double alpha, double delta, double csq, double sc, double rho, double d2);

/// Vertex of alpha_form; requires 3 delta - C^2 > 0.
double alpha_form_min(double delta, double csq, double sc, double rho);

/// (K + S).C + 2 C^2 + rho - 4 delta; zero iff the Hirzebruch-Hoefer
/// proportionality relation holds.
double proportionality_residual(const CurveData& curve, double delta);

/// Lower bound for C^2 after the triangle inequality:
/// 2 delta + sc + rho - 2 d2 - 2 sqrt(d2^2 + delta d2) - 2 sqrt(d2 sc) - 2 sqrt(d2 rho).
double self_intersection_chain_lower(double delta, double sc, double rho, double d2);

/// Exact coefficient 4 + 2 sqrt((7 + sqrt(13))/2) that the bound C^2 >= -9 d2
/// rounds up; strictly below 9.
double exact_bound_coefficient();

/// delta threshold ((5 + sqrt(13))/2) d2 above which the chain bound is >= 0.
double nonneg_delta_threshold(double d2);

/// Dedekind zeta value zeta_K(-1) = (1/60) sum over x of sigma_1((p - x^2)/4),
/// exact. p must be a prime = 1 (mod 4).
Rational zeta_minus_one(std::int64_t p);

/// Volume term: index * 2 * zeta_K(-1).
Rational volume(std::int64_t p, std::int64_t index);

/// sum over x of sigma_0((p - x^2)/4), exact.
std::int64_t sigma0_sum(std::int64_t p);
/// sum over x of sigma_1((p - x^2)/4), exact (= 60 * zeta_K(-1)).
std::int64_t sigma1_sum(std::int64_t p);

/// sqrt(p) ((3/(2 pi^2)) log^2 p + 1.05 log p), the sigma_0-sum upper bound.
double sigma0_sum_upper(std::int64_t p);
/// p times sigma0_sum_upper: the sigma_1-sum upper bound p^{3/2}(...).
double sigma1_sum_upper(std::int64_t p);
/// Half the sigma_0 bound: upper bound for the number of cusp-resolution curves.
double cusp_curve_count_upper(std::int64_t p);

// Counts of quotient singularities of types (2;1,1), (3;1,1), (3;1,-1):
// the exact a2 = h(-4p) and the Paley-based lower bounds entering the cusp
// contribution (3/2) a2 + (5/3) a3+ + (8/3) a3-.
struct QuotientSingularityBounds {
    std::int64_t a2_exact;
    double a2_lower;
    double a3_plus_lower;
    double a3_minus_lower;
    double contribution_lower;
    bool valid_range;  // the contribution formula is stated for p > 500
};

QuotientSingularityBounds quotient_singularity_bounds(std::int64_t p);

// The explicit negativity bound, term by term. bound = -(t1+...+t5).
struct ChernBoundTerms {
    double t1, t2, t3, t4, t5;
    double bound;
};

ChernBoundTerms chern_negativity_terms(std::int64_t p);
double chern_negativity_bound(std::int64_t p);

}  // namespace hzbound::surface
