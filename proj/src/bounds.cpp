#include "hzbound/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hzbound::bounds {

using arith::loglog;

namespace {
const double kExpGamma = std::exp(arith::kGamma);
const double kPaleyCoef = std::numbers::pi / (24.0 * kExpGamma);
// Robin's constant; tight at N = 12. Note the merged form's additive
// constant is 0.6482 throughout the downstream estimates.
constexpr double kRobinConst = 0.6483;
}  // namespace

double paley_lower(double d) {
    if (!(d >= 3.0)) throw std::domain_error("paley_lower: argument must be >= 3");
    return kPaleyCoef * std::sqrt(d) / loglog(d);
}

RobinBound robin_upper(std::int64_t N) {
    if (N < 3) throw std::domain_error("robin_upper: N must be >= 3");
    double nd = static_cast<double>(N);
    double ll = loglog(nd);
    return RobinBound{kExpGamma * nd * ll + kRobinConst * nd / ll,
                      (kExpGamma + 0.6482) * nd * ll};
}

double paley_lower_sum(const Rational& x) {
    if (x.get_den() == 1) {
        if (!x.get_num().fits_slong_p())
            throw std::invalid_argument("paley_lower_sum: argument too large");
        std::int64_t n = x.get_num().get_si();
        if (n < 1) throw std::domain_error("paley_lower_sum: argument must be positive");
        double total = 0.0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % (d * d) != 0) continue;
            std::int64_t arg = n / (d * d);
            if (arg < 3)
                throw std::domain_error("paley_lower_sum: term d=" + std::to_string(d) +
                                        " has argument " + std::to_string(arg) +
                                        " below the domain of the surrogate");
            total += paley_lower(static_cast<double>(arg));
        }
        return total;
    }
    double v = x.get_d();
    if (v < 3.0)
        throw std::domain_error("paley_lower_sum: non-integral argument " +
                                std::to_string(v) + " below the domain of the surrogate");
    return paley_lower(v);
}

ChainBounds interior_sum_chain(std::int64_t p, std::int64_t n) {
    if (p < 5 || p % 4 != 1 || !arith::is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("interior_sum_chain: p must be a prime = 1 (mod 4)");
    if (n < 1) throw std::invalid_argument("interior_sum_chain: n must be >= 1");
    const std::int64_t kmax = 2 * n / p;  // number of summands
    const double nd = static_cast<double>(n);
    const double pd = static_cast<double>(p);
    ChainBounds out{0.0, 0.0, 0.0};
    const double front = std::numbers::pi * nd /
                         (12.0 * kExpGamma * std::sqrt(pd) * loglog(4.0 * nd * nd));
    double linear_sum = 0.0;
    for (std::int64_t k = 0; k < kmax; ++k) {
        std::int64_t x = (p - 1) / 2 + k * p;
        Rational arg = make_rational(4 * n * n - x * x, p);
        try {
            out.rhs1 += paley_lower_sum(arg);
        } catch (const std::domain_error& e) {
            throw std::domain_error("interior_sum_chain: k=" + std::to_string(k) + ": " +
                                    e.what());
        }
        linear_sum += 1.0 - static_cast<double>(x) * static_cast<double>(x) /
                                (2.0 * nd * nd);
    }
    out.rhs2 = front * linear_sum;
    out.rhs3 = front * (2.0 * nd / (3.0 * pd) - 1.0 + 1.0 / pd);
    return out;
}

double self_intersection_lower(std::int64_t p, std::int64_t N, TnLowerVariant variant,
                               const BoundConstants& constants) {
    double nd = static_cast<double>(N);
    double pd = static_cast<double>(p);
    double coef = nd * constants.delta / (std::sqrt(pd) * loglog(4.0 * nd * nd));
    if (variant == TnLowerVariant::proof) coef /= 6.0;
    return -constants.c * nd * loglog(nd) / 6.0 +
           coef * (2.0 * nd / (3.0 * pd) - 1.0 + 1.0 / pd);
}

double epsilon_of(std::int64_t p) {
    if (p < 16) throw std::domain_error("epsilon_of: requires loglog p > 1, i.e. p >= 16");
    double lp = std::log(static_cast<double>(p));
    return std::log(std::log(lp)) / lp;
}

double k_threshold(double eps, TnLowerVariant variant) {
    if (variant == TnLowerVariant::statement) {
        if (!(eps < 1.0)) throw std::domain_error("k_threshold: eps must be < 1");
        return 3.0 / (2.0 * (1.0 - eps));
    }
    if (!(eps < 1.0 / 3.0)) throw std::domain_error("k_threshold: eps must be < 1/3");
    return 3.0 / (2.0 * (1.0 - 3.0 * eps));
}

double model_t(std::int64_t p, double N, double keps, const BoundConstants& constants) {
    double pd = static_cast<double>(p);
    double pk = std::pow(pd, keps);
    return -constants.c * N * pk / 6.0 +
           N * constants.delta / (std::sqrt(pd) * pk * pk) *
               (2.0 * N / (3.0 * pd) - 1.0 + 1.0 / pd);
}

double model_t_deriv(std::int64_t p, double N, double keps, const BoundConstants& constants) {
    double pd = static_cast<double>(p);
    double pk = std::pow(pd, keps);
    return -constants.c * pk / 6.0 +
           constants.delta / (std::sqrt(pd) * pk * pk) *
               (4.0 * N / (3.0 * pd) - 1.0 + 1.0 / pd);
}

double model_argmin(std::int64_t p, double keps, const BoundConstants& constants) {
    double pd = static_cast<double>(p);
    return constants.c / (8.0 * constants.delta) * std::pow(pd, 1.5) *
               std::pow(pd, 3.0 * keps) +
           0.75 * (pd - 1.0);
}

double model_argmin_published(std::int64_t p, double keps, const BoundConstants& constants) {
    double pd = static_cast<double>(p);
    return constants.c / (8.0 * constants.delta) * std::pow(pd, 1.5) *
               std::pow(pd, 3.0 * keps) -
           0.75 * (pd - 1.0);
}

double asymptotic_floor(std::int64_t p, const BoundConstants& constants, double keps) {
    double pd = static_cast<double>(p);
    return -constants.c * constants.c / (96.0 * constants.delta) * std::pow(pd, 1.5) *
           std::pow(pd, 4.0 * keps);
}

}  // namespace hzbound::bounds
