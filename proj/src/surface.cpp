#include "hzbound/surface.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hzbound/arith.hpp"
#include "hzbound/classnum.hpp"

namespace hzbound::surface {

namespace {

const double kExpGamma = std::exp(arith::kGamma);

void require_p(std::int64_t p) {
    if (p < 5 || p % 4 != 1 || !arith::is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("p must be a prime = 1 (mod 4), got " + std::to_string(p));
}

/// log^2 factor shared by the sigma_0 / sigma_1 bounds.
double log_factor(std::int64_t p) {
    double lp = std::log(static_cast<double>(p));
    return 3.0 / (2.0 * std::numbers::pi * std::numbers::pi) * lp * lp + 1.05 * lp;
}

}  // namespace

double delta_of(const CurveData& curve) {
    return 0.5 * (curve.kc + curve.csq - 2.0 * static_cast<double>(curve.g) + 2.0);
}

double miyaoka_lhs(double alpha, const CurveData& curve, const SurfaceData& surface) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("miyaoka_lhs: alpha must lie in [0, 1]");
    double g = static_cast<double>(curve.g);
    return alpha * alpha / 2.0 * (curve.csq + 3.0 * curve.kc - 6.0 * g + 6.0) -
           2.0 * alpha * (curve.kc - 3.0 * g + 3.0) + surface.d2;
}

double alpha_form(double alpha, double delta, double csq, double sc, double rho, double d2) {
    return alpha * alpha * (3.0 * delta - csq) + alpha * (csq - sc - rho - 2.0 * delta) + d2;
}

double alpha_form_min(double delta, double csq, double sc, double rho) {
    double lead = 3.0 * delta - csq;
    if (!(lead > 0.0))
        throw std::domain_error("alpha_form_min: 3*delta - C^2 must be positive");
    return (2.0 * delta + sc + rho - csq) / (2.0 * lead);
}

double proportionality_residual(const CurveData& curve, double delta) {
    return (curve.kc + curve.sc) + 2.0 * curve.csq + curve.rho - 4.0 * delta;
}

double self_intersection_chain_lower(double delta, double sc, double rho, double d2) {
    if (delta < 0.0 || sc < 0.0 || rho < 0.0 || !(d2 > 0.0))
        throw std::domain_error(
            "self_intersection_chain_lower: needs delta, sc, rho >= 0 and d2 > 0");
    return 2.0 * delta + sc + rho - 2.0 * d2 - 2.0 * std::sqrt(d2 * d2 + delta * d2) -
           2.0 * std::sqrt(d2 * sc) - 2.0 * std::sqrt(d2 * rho);
}

double exact_bound_coefficient() { return 4.0 + 2.0 * std::sqrt((7.0 + std::sqrt(13.0)) / 2.0); }

double nonneg_delta_threshold(double d2) { return (5.0 + std::sqrt(13.0)) / 2.0 * d2; }

Rational zeta_minus_one(std::int64_t p) {
    require_p(p);
    return make_rational(sigma1_sum(p), 60);
}

Rational volume(std::int64_t p, std::int64_t index) {
    if (index < 1) throw std::invalid_argument("volume: index must be >= 1");
    return make_rational(2 * index) * zeta_minus_one(p);
}

std::int64_t sigma0_sum(std::int64_t p) {
    require_p(p);
    std::int64_t total = 0;
    for (std::int64_t x = 1; x * x < p; x += 2)  // (p - x^2)/4 integral iff x odd
        total += 2 * arith::sigma(0, (p - x * x) / 4);
    return total;
}

std::int64_t sigma1_sum(std::int64_t p) {
    require_p(p);
    std::int64_t total = 0;
    for (std::int64_t x = 1; x * x < p; x += 2)
        total += 2 * arith::sigma(1, (p - x * x) / 4);
    return total;
}

double sigma0_sum_upper(std::int64_t p) {
    require_p(p);
    return std::sqrt(static_cast<double>(p)) * log_factor(p);
}

double sigma1_sum_upper(std::int64_t p) { return static_cast<double>(p) * sigma0_sum_upper(p); }

double cusp_curve_count_upper(std::int64_t p) { return 0.5 * sigma0_sum_upper(p); }

QuotientSingularityBounds quotient_singularity_bounds(std::int64_t p) {
    require_p(p);
    double sp = std::sqrt(static_cast<double>(p));
    double ll4 = arith::loglog(4.0 * static_cast<double>(p));
    double ll3 = arith::loglog(3.0 * static_cast<double>(p));
    QuotientSingularityBounds out{};
    out.a2_exact = classnum::class_number(-4 * p);
    out.a2_lower = std::numbers::pi / (12.0 * kExpGamma) * sp / ll4;
    out.a3_plus_lower = std::sqrt(3.0) * std::numbers::pi / (6.0 * kExpGamma) * sp / ll3;
    out.a3_minus_lower = std::sqrt(3.0) * std::numbers::pi / (48.0 * kExpGamma) * sp / ll3;
    out.contribution_lower =
        1.5 * out.a2_lower + 5.0 / 3.0 * out.a3_plus_lower + 8.0 / 3.0 * out.a3_minus_lower;
    out.valid_range = p > 500;
    return out;
}

ChernBoundTerms chern_negativity_terms(std::int64_t p) {
    require_p(p);
    double pd = static_cast<double>(p);
    double sp = std::sqrt(pd);
    double L = log_factor(p);
    double ll4 = arith::loglog(4.0 * pd);
    double ll3 = arith::loglog(3.0 * pd);
    ChernBoundTerms t{};
    t.t1 = 0.9 * pd * sp * L;
    t.t2 = 13.5 * sp * L;
    t.t3 = 27.0 * std::numbers::pi / (8.0 * kExpGamma) * sp / ll4;
    t.t4 = 15.0 * std::sqrt(3.0) * std::numbers::pi / (2.0 * kExpGamma) * sp / ll3;
    t.t5 = 3.0 * std::sqrt(3.0) * std::numbers::pi / (2.0 * kExpGamma) * sp / ll3;
    t.bound = -(t.t1 + t.t2 + t.t3 + t.t4 + t.t5);
    return t;
}

double chern_negativity_bound(std::int64_t p) { return chern_negativity_terms(p).bound; }

}  // namespace hzbound::surface
