#include "hzbound/reports.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hzbound/arith.hpp"
#include "hzbound/bounds.hpp"
#include "hzbound/curves.hpp"
#include "hzbound/surface.hpp"

namespace hzbound::reports {

using bounds::TnLowerVariant;

namespace {

constexpr std::int64_t kShiftRangeM = 200;   // m-range of the square-boundary claims
constexpr std::int64_t kChainRangeN = 500;   // n-range of the chain claims
constexpr std::int64_t kRobinRangeCap = 1'000'000;

std::int64_t hurwitz_limit_for(std::int64_t p, std::int64_t n_max) {
    return 4 * n_max * n_max / p + 1;
}

}  // namespace

ScanResult run_scan(const ScanOptions& options, classnum::ClassNumberCache& cache) {
    curves::HzParams params(options.p);
    if (options.n_max < 1) throw std::invalid_argument("scan: n_max must be >= 1");
    ScanResult result;
    result.options = options;
    result.floor = bounds::asymptotic_floor(options.p);
    result.p_15_7 = std::pow(static_cast<double>(options.p), 15.0 / 7.0);

    auto family = curves::split_prime_products(options.p, options.n_max);
    if (family.empty()) return result;
    cache.ensure_hurwitz(hurwitz_limit_for(options.p, options.n_max));

    result.rows.resize(family.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= family.size()) break;
            std::int64_t N = family[i];
            ScanRecord rec;
            rec.N = N;
            rec.eligible = true;  // split products are eligible by construction
            rec.tn2 = curves::self_intersection(params, N, cache);
            if (options.include_ip)
                rec.tn2_real =
                    curves::self_intersection_full(params, N, cache, options.tol);
            rec.sigma_floor = make_rational(-arith::sigma(1, N), 6);
            rec.lemma2_statement =
                bounds::self_intersection_lower(options.p, N, TnLowerVariant::statement);
            rec.lemma2_proof =
                bounds::self_intersection_lower(options.p, N, TnLowerVariant::proof);
            if (options.include_ip) {
                rec.viol_statement = rec.tn2_real < rec.lemma2_statement;
                rec.viol_proof = rec.tn2_real < rec.lemma2_proof;
            } else {
                rec.viol_statement = rec.tn2 < Rational(rec.lemma2_statement);
                rec.viol_proof = rec.tn2 < Rational(rec.lemma2_proof);
            }
            result.rows[i] = std::move(rec);
        }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    result.has_min = true;
    result.argmin_index = 0;
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        if (options.include_ip
                ? result.rows[i].tn2_real < result.rows[result.argmin_index].tn2_real
                : result.rows[i].tn2 < result.rows[result.argmin_index].tn2)
            result.argmin_index = i;
    }
    return result;
}

void write_scan_csv(const ScanResult& result, std::ostream& out) {
    out << "N,eligible,tn2,sigma_floor,lemma2_statement,lemma2_proof,"
           "viol_statement,viol_proof\n";
    for (const auto& r : result.rows) {
        out << r.N << ',' << (r.eligible ? 1 : 0) << ',';
        if (result.options.include_ip)
            out << format_real(r.tn2_real);
        else
            out << format_rational(r.tn2);
        out << ',' << format_rational(r.sigma_floor) << ','
            << format_real(r.lemma2_statement) << ',' << format_real(r.lemma2_proof) << ','
            << (r.viol_statement ? 1 : 0) << ',' << (r.viol_proof ? 1 : 0) << '\n';
    }
}

std::string scan_summary(const ScanResult& result) {
    std::ostringstream os;
    os << "scan p=" << result.options.p << " n_max=" << result.options.n_max;
    if (!result.has_min) {
        os << ": no eligible N";
        return os.str();
    }
    const auto& m = result.rows[result.argmin_index];
    os << " rows=" << result.rows.size() << " min_tn2=";
    if (result.options.include_ip)
        os << format_real(m.tn2_real);
    else
        os << format_rational(m.tn2);
    os << " argmin_N=" << m.N << " asymptotic_floor=" << format_real(result.floor)
       << " argmin_le_p_15_7="
       << (static_cast<double>(m.N) <= result.p_15_7 ? "yes" : "no");
    return os.str();
}

namespace {

std::string param_str(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ';';
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

}  // namespace

std::vector<ClaimStatus> run_verify(const VerifyOptions& opt,
                                    classnum::ClassNumberCache& cache) {
    curves::HzParams params(opt.p);
    if (opt.n_max < 1) throw std::invalid_argument("verify: n_max must be >= 1");
    if (opt.d_max < 4) throw std::invalid_argument("verify: d_max must be >= 4");
    const std::int64_t p = opt.p;
    std::vector<ClaimStatus> claims;

    std::int64_t warm = std::max({hurwitz_limit_for(p, opt.n_max),
                                  hurwitz_limit_for(p, kChainRangeN),
                                  4 * kShiftRangeM * kShiftRangeM / p + 1, opt.d_max});
    cache.ensure_hurwitz(warm);

    // (a) strictness of the two-term divisor-sum bound against exact sigma_1
    {
        std::int64_t hi = std::min(opt.n_max, kRobinRangeCap);
        ClaimStatus c{"robin_strict",
                      param_str({{"range", "3<=N<=" + std::to_string(hi)}}), "PASS", ""};
        if (hi < 3) {
            c.status = "SKIPPED";
        } else {
            auto sig = arith::sigma1_table(hi);
            for (std::int64_t N = 3; N <= hi; ++N) {
                if (!(static_cast<double>(sig[static_cast<std::size_t>(N)]) <
                      bounds::robin_upper(N).two_term)) {
                    c.status = "FAIL";
                    c.witness = "N=" + std::to_string(N);
                    break;
                }
            }
        }
        claims.push_back(std::move(c));
    }

    // (b) Paley surrogate vs exact class numbers; exceptions are the witness
    {
        ClaimStatus c{"paley_vs_exact",
                      param_str({{"range", "3<=d<=" + std::to_string(opt.d_max)}}), "PASS",
                      ""};
        std::string exceptions;
        for (std::int64_t d = 3; d <= opt.d_max; ++d) {
            if (!classnum::is_valid_discriminant(-d)) continue;
            if (bounds::paley_lower(static_cast<double>(d)) >
                static_cast<double>(cache.class_number(-d))) {
                if (!exceptions.empty()) exceptions += ';';
                exceptions += "d=" + std::to_string(d);
            }
        }
        if (!exceptions.empty()) {
            c.status = "FAIL";
            c.witness = exceptions;
        }
        claims.push_back(std::move(c));
    }

    // (c) boundary terms at square arguments: constant -1/6 shift holds,
    //     the published linear -n/6 split does not
    {
        ClaimStatus c{"hp_square_shift_const",
                      param_str({{"p", std::to_string(p)},
                                 {"range", "1<=m<=" + std::to_string(kShiftRangeM)}}),
                      "PASS", ""};
        ClaimStatus cl{"hp_square_shift_linear", c.parameters, "PASS", ""};
        for (std::int64_t m = 1; m <= kShiftRangeM; ++m) {
            std::int64_t full = curves::class_number_sum12(params, m * m, cache, false);
            std::int64_t interior = curves::class_number_sum12(params, m * m, cache, true);
            if (c.status == "PASS" && full != interior - 2) {
                c.status = "FAIL";
                c.witness = "m=" + std::to_string(m);
            }
            if (cl.status == "PASS" && full != interior - 2 * m * m) {
                cl.status = "FAIL";
                cl.witness = "m=" + std::to_string(m);
            }
            if (c.status == "FAIL" && cl.status == "FAIL") break;
        }
        claims.push_back(std::move(c));
        claims.push_back(std::move(cl));
    }

    // (d)/(e) the chain of lower bounds for the interior sum
    {
        std::string range_params =
            param_str({{"p", std::to_string(p)},
                       {"range", "1<=n<=" + std::to_string(kChainRangeN)},
                       {"tol", "1e-9"}});
        ClaimStatus cd{"hp0_chain_internal", range_params, "PASS", ""};
        ClaimStatus ce{"hp0_chain_outer", range_params, "PASS", ""};
        for (std::int64_t n = 1; n <= kChainRangeN; ++n) {
            if (2 * n / p < 1) continue;  // empty sum
            bounds::ChainBounds ch;
            try {
                ch = bounds::interior_sum_chain(p, n);
            } catch (const std::domain_error&) {
                continue;  // some surrogate argument below domain
            }
            auto slack = [](double x) { return 1e-9 * std::max(1.0, std::fabs(x)); };
            if (cd.status == "PASS" &&
                !(ch.rhs1 >= ch.rhs2 - slack(ch.rhs2) && ch.rhs2 >= ch.rhs3 - slack(ch.rhs3))) {
                cd.status = "FAIL";
                cd.witness = "n=" + std::to_string(n);
            }
            double exact =
                static_cast<double>(curves::class_number_sum12(params, n * n, cache, true)) /
                12.0;
            if (ce.status == "PASS" && !(exact >= ch.rhs1 - slack(ch.rhs1))) {
                ce.status = "FAIL";
                ce.witness = "n=" + std::to_string(n) + ";exact=" + format_real(exact) +
                             ";rhs1=" + format_real(ch.rhs1);
            }
        }
        claims.push_back(std::move(cd));
        claims.push_back(std::move(ce));
    }

    // (f)/(g): the analytic lower bounds and the asymptotic floor against the
    // exact scan over the split-prime family
    ScanOptions scan_opt;
    scan_opt.p = p;
    scan_opt.n_max = opt.n_max;
    ScanResult scan = run_scan(scan_opt, cache);
    {
        std::string family_params = param_str(
            {{"p", std::to_string(p)}, {"family", "split<=" + std::to_string(opt.n_max)}});
        ClaimStatus cs{"tn2_lower_statement", family_params, "PASS", ""};
        ClaimStatus cp{"tn2_lower_proof", family_params, "PASS", ""};
        for (const auto& row : scan.rows) {
            if (cs.status == "PASS" && row.viol_statement) {
                cs.status = "FAIL";
                cs.witness = "N=" + std::to_string(row.N);
            }
            if (cp.status == "PASS" && row.viol_proof) {
                cp.status = "FAIL";
                cp.witness = "N=" + std::to_string(row.N);
            }
        }
        if (scan.rows.empty()) cs.status = cp.status = "SKIPPED";
        claims.push_back(std::move(cs));
        claims.push_back(std::move(cp));

        ClaimStatus cg{"asymptotic_floor", family_params, "PASS", ""};
        if (!scan.has_min) {
            cg.status = "SKIPPED";
        } else {
            const auto& m = scan.rows[scan.argmin_index];
            if (m.tn2 < Rational(scan.floor)) {
                cg.status = "FAIL";
                cg.witness = "N=" + std::to_string(m.N) + ";tn2=" + format_rational(m.tn2) +
                             ";floor=" + format_real(scan.floor);
            }
        }
        claims.push_back(std::move(cg));
    }

    // (h) nonnegativity beyond p^{15/7}, over every eligible N
    {
        double threshold = std::pow(static_cast<double>(p), 15.0 / 7.0);
        std::int64_t lo = static_cast<std::int64_t>(std::floor(threshold)) + 1;
        ClaimStatus c{"nonneg_tail",
                      param_str({{"p", std::to_string(p)},
                                 {"range", std::to_string(lo) + "<=N<=" +
                                               std::to_string(opt.n_max)}}),
                      "PASS", ""};
        if (lo > opt.n_max) {
            c.status = "SKIPPED";
        } else {
            for (std::int64_t N = lo; N <= opt.n_max; ++N) {
                if (!curves::is_eligible(params, N)) continue;
                Rational tn2 = curves::self_intersection(params, N, cache, true);
                if (tn2 < 0) {
                    c.status = "FAIL";
                    c.witness = "N=" + std::to_string(N) + ";tn2=" + format_rational(tn2);
                    break;
                }
            }
        }
        claims.push_back(std::move(c));
    }

    // (i) the two printed forms of the model argmin differ by (3/2)(p-1)
    {
        double exact = bounds::model_argmin(p, 0.0);
        double published = bounds::model_argmin_published(p, 0.0);
        ClaimStatus c{"model_argmin_shift",
                      param_str({{"p", std::to_string(p)}, {"keps", "0"}}), "PASS", ""};
        if (exact != published) {
            c.status = "FAIL";
            c.witness = "exact=" + format_real(exact) +
                        ";published=" + format_real(published) +
                        ";shift=" + format_real(exact - published);
        }
        claims.push_back(std::move(c));
    }

    return claims;
}

void write_claims_csv(const std::vector<ClaimStatus>& claims, std::ostream& out) {
    out << "schema,claim_id,parameters,status,witness\n";
    for (const auto& c : claims)
        out << kClaimSchemaVersion << ',' << c.claim_id << ',' << c.parameters << ','
            << c.status << ',' << c.witness << '\n';
}

std::string chern_report(std::int64_t p) {
    std::ostringstream os;
    Rational zeta = surface::zeta_minus_one(p);  // validates p
    os << "p: " << p << '\n';
    os << "zeta_K(-1): " << format_rational(zeta) << '\n';
    os << "volume(index=1): " << format_rational(surface::volume(p, 1)) << '\n';
    os << "sigma0_sum: " << surface::sigma0_sum(p) << '\n';
    os << "sigma0_sum_upper: " << format_real(surface::sigma0_sum_upper(p)) << '\n';
    os << "sigma1_sum: " << surface::sigma1_sum(p) << '\n';
    os << "sigma1_sum_upper: " << format_real(surface::sigma1_sum_upper(p)) << '\n';
    os << "cusp_curve_count_upper: " << format_real(surface::cusp_curve_count_upper(p))
       << '\n';
    auto q = surface::quotient_singularity_bounds(p);
    os << "a2_exact: " << q.a2_exact << '\n';
    os << "a2_lower: " << format_real(q.a2_lower) << '\n';
    os << "a3_plus_lower: " << format_real(q.a3_plus_lower) << '\n';
    os << "a3_minus_lower: " << format_real(q.a3_minus_lower) << '\n';
    os << "quotient_contribution_lower: " << format_real(q.contribution_lower) << '\n';
    os << "nine_x_quotient_contribution_lower: " << format_real(9.0 * q.contribution_lower)
       << '\n';
    if (!q.valid_range)
        os << "warning: p <= 500, the quotient-singularity contribution formula is stated "
              "for p > 500\n";
    auto t = surface::chern_negativity_terms(p);
    os << "c2_bound_terms: " << format_real(t.t1) << ';' << format_real(t.t2) << ';'
       << format_real(t.t3) << ';' << format_real(t.t4) << ';' << format_real(t.t5) << '\n';
    os << "c2_bound: " << format_real(t.bound) << '\n';
    return os.str();
}

}  // namespace hzbound::reports
