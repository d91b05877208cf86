// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Oracles here are written independently of the library paths they check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hzbound/arith.hpp"
#include "hzbound/bounds.hpp"
#include "hzbound/classnum.hpp"
#include "hzbound/curves.hpp"
#include "hzbound/rational.hpp"
#include "hzbound/reports.hpp"
#include "hzbound/surface.hpp"

using namespace hzbound;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

classnum::ClassNumberCache& cache_for(std::int64_t p) {
    static std::map<std::int64_t, std::unique_ptr<classnum::ClassNumberCache>> caches;
    auto& slot = caches[p];
    if (!slot) slot = std::make_unique<classnum::ClassNumberCache>();
    return *slot;
}

// ---------------------------------------------------------------------------
// Test-side oracles (self-contained; no shared code with the library).

std::int64_t brute_class_number(std::int64_t D) {  // D = |disc|
    std::int64_t count = 0;
    for (std::int64_t a = 1; 3 * a * a <= D; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t num = b * b + D;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

struct Oracle {
    std::int64_t p;
    std::vector<bool> residue;  // residue[r] iff r is a nonzero square mod p
    std::unordered_map<std::int64_t, std::int64_t> h_memo;

    explicit Oracle(std::int64_t p_) : p(p_), residue(static_cast<std::size_t>(p_), false) {
        for (std::int64_t x = 1; x < p; ++x)
            residue[static_cast<std::size_t>(x * x % p)] = true;
    }

    int chi(std::int64_t n) {
        std::int64_t r = ((n % p) + p) % p;
        if (r == 0) return 0;
        return residue[static_cast<std::size_t>(r)] ? 1 : -1;
    }

    std::int64_t h(std::int64_t D) {
        auto it = h_memo.find(D);
        if (it != h_memo.end()) return it->second;
        std::int64_t v = brute_class_number(D);
        h_memo.emplace(D, v);
        return v;
    }

    std::int64_t hurwitz12(std::int64_t n) {
        if (n == 0) return -1;
        std::int64_t acc = 0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % (d * d) != 0) continue;
            std::int64_t k = n / (d * d);
            if (k % 4 == 1 || k % 4 == 2) continue;
            acc += k == 3 ? 4 : k == 4 ? 6 : 12 * h(k);
        }
        return acc;
    }

    // 24 * T_N^2 in compact mode, straight double loop over divisors and x.
    std::int64_t t24(std::int64_t N) {
        std::int64_t total = 0;
        for (std::int64_t n = 1; n <= N; ++n) {
            if (N % n != 0) continue;
            std::int64_t m = N / n;
            std::int64_t hp12 = 0;
            for (std::int64_t x = -2 * m; x <= 2 * m; ++x) {
                if ((4 * m * m - x * x) % p != 0) continue;
                hp12 += hurwitz12((4 * m * m - x * x) / p);
            }
            total += n * (chi(n) + chi(N / n)) * hp12;
        }
        return total;
    }

    std::vector<std::int64_t> family(std::int64_t n_max) {
        std::vector<bool> comp(static_cast<std::size_t>(n_max) + 1, false);
        std::vector<std::int64_t> primes;
        for (std::int64_t q = 2; q <= n_max; ++q) {
            if (comp[static_cast<std::size_t>(q)]) continue;
            for (std::int64_t m = q * q; m <= n_max; m += q)
                comp[static_cast<std::size_t>(m)] = true;
            if (chi(q) == 1) primes.push_back(q);
        }
        std::vector<std::int64_t> out;
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                                 std::int64_t prod) {
            for (std::size_t j = i; j < primes.size(); ++j) {
                if (prod > n_max / primes[j]) break;
                out.push_back(prod * primes[j]);
                rec(j + 1, prod * primes[j]);
            }
        };
        rec(0, 1);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// ---------------------------------------------------------------------------

void criterion1_class_numbers() {
    require(classnum::class_number(-3) == 1, "h(-3) != 1");
    require(classnum::class_number(-4) == 1, "h(-4) != 1");
    require(classnum::class_number(-23) == 3, "h(-23) != 3");
    require(classnum::class_number(-52) == 2, "h(-52) != 2");
    for (std::int64_t D = 3; D <= 10000; ++D) {
        if (!classnum::is_valid_discriminant(-D)) continue;
        if (classnum::class_number(-D) != brute_class_number(D))
            throw Failure("mismatch at d = -" + std::to_string(D));
    }
}

void criterion2_hurwitz() {
    require(classnum::hurwitz(0) == make_rational(-1, 12), "H(0) != -1/12");
    auto& cache = cache_for(0);
    cache.ensure_hurwitz(10000);
    for (std::int64_t n = 1; n <= 10000; ++n) {
        Rational H = cache.hurwitz(n);
        Rational twelve = H * 12;
        require(twelve.get_den() == 1, "12*H not integral at n=" + std::to_string(n));
        if (n % 4 == 1 || n % 4 == 2)
            require(H == 0, "H != 0 at n=" + std::to_string(n));
    }
}

void criterion3_boundary_identity() {
    for (std::int64_t p : {5, 13, 17}) {
        auto& cache = cache_for(p);
        cache.ensure_hurwitz(4 * 200 * 200 / p + 1);
        curves::HzParams params(p);
        for (std::int64_t m = 1; m <= 200; ++m) {
            std::int64_t full = curves::class_number_sum12(params, m * m, cache, false);
            std::int64_t interior = curves::class_number_sum12(params, m * m, cache, true);
            if (full != interior - 2)
                throw Failure("identity fails at p=" + std::to_string(p) +
                              " m=" + std::to_string(m));
        }
    }
}

void criterion4_robin() {
    const std::int64_t limit = 1'000'000;
    auto sig = arith::sigma1_table(limit);
    for (std::int64_t N = 3; N <= limit; ++N) {
        if (!(static_cast<double>(sig[static_cast<std::size_t>(N)]) <
              bounds::robin_upper(N).two_term))
            throw Failure("strictness fails at N=" + std::to_string(N));
    }
}

void criterion5_paley() {
    auto& cache = cache_for(0);
    cache.ensure_hurwitz(10000);
    std::vector<std::int64_t> exceptions;
    for (std::int64_t d = 3; d <= 10000; ++d) {
        if (!classnum::is_valid_discriminant(-d)) continue;
        if (bounds::paley_lower(static_cast<double>(d)) >
            static_cast<double>(cache.class_number(-d)))
            exceptions.push_back(d);
    }
    require(exceptions == std::vector<std::int64_t>{3},
            "exception set is not {3}: found " + std::to_string(exceptions.size()) +
                " entries");
}

void criterion6_orbit_sums() {
    curves::HzParams p5(5);
    require(curves::unit_orbit_sum(p5, 2, 1e-12) == 0.0, "I_5(2) != 0");
    double i1 = curves::unit_orbit_sum(p5, 1, 1e-9);
    double i4 = curves::unit_orbit_sum(p5, 4, 1e-9);
    require(std::fabs(i1 - 1.0) <= 1e-9, "I_5(1) != 1, got " + format_real(i1));
    require(std::fabs(i4 - 2.0) <= 1e-9, "I_5(4) != 2, got " + format_real(i4));
}

void criterion7_exact_scan() {
    auto& cache = cache_for(13);
    reports::ScanOptions opt;
    opt.p = 13;
    opt.n_max = 2000;
    auto result = reports::run_scan(opt, cache);
    require(result.has_min, "scan is empty");
    for (const auto& r : result.rows)
        if (!(r.tn2 >= r.sigma_floor))
            throw Failure("sigma floor violated at N=" + std::to_string(r.N));
    bool saw3 = false;
    for (const auto& r : result.rows)
        if (r.N == 3) {
            saw3 = true;
            require(r.tn2 == make_rational(-2, 3), "T_3^2 != -2/3");
        }
    require(saw3, "N=3 missing from the scan");

    Oracle oracle(13);
    auto family = oracle.family(2000);
    require(family.size() == result.rows.size(), "family size mismatch");
    std::int64_t best24 = 0, best_n = 0;
    bool first = true;
    for (std::int64_t N : family) {
        std::int64_t t = oracle.t24(N);
        if (first || t < best24) {
            best24 = t;
            best_n = N;
            first = false;
        }
    }
    const auto& m = result.rows[result.argmin_index];
    require(m.N == best_n, "argmin mismatch: pipeline " + std::to_string(m.N) +
                               " oracle " + std::to_string(best_n));
    require(m.tn2 == make_rational(best24, 24),
            "min value mismatch at N=" + std::to_string(best_n));
}

void criterion8_asymptotic_floor() {
    for (std::int64_t p : {5, 13, 17, 29}) {
        auto& cache = cache_for(p);
        reports::ScanOptions opt;
        opt.p = p;
        opt.n_max = 5000;
        auto result = reports::run_scan(opt, cache);
        require(result.has_min, "empty scan at p=" + std::to_string(p));
        const auto& m = result.rows[result.argmin_index];
        if (!(m.tn2 >= Rational(result.floor)))
            throw Failure("floor violated at p=" + std::to_string(p) +
                          " N=" + std::to_string(m.N) + " tn2=" + format_rational(m.tn2) +
                          " floor=" + format_real(result.floor));
    }
}

void criterion9_tail_nonnegative() {
    for (std::int64_t p : {5, 13}) {
        auto& cache = cache_for(p);
        reports::VerifyOptions opt;
        opt.p = p;
        opt.n_max = 5000;
        opt.d_max = 4;
        auto claims = reports::run_verify(opt, cache);
        bool found = false;
        for (const auto& c : claims) {
            if (c.claim_id == "asymptotic_floor")
                require(c.status == "PASS", "asymptotic_floor claim at p=" +
                                                std::to_string(p) + ": " + c.status);
            if (c.claim_id != "nonneg_tail") continue;
            found = true;
            require(c.status == "PASS", "nonneg_tail at p=" + std::to_string(p) + ": " +
                                            c.status + " witness " + c.witness);
        }
        require(found, "nonneg_tail claim missing");
    }
}

void criterion10_statement_erratum() {
    auto& cache = cache_for(13);
    reports::VerifyOptions opt;
    opt.p = 13;
    opt.n_max = 2000;
    opt.d_max = 10000;
    auto claims = reports::run_verify(opt, cache);
    std::ostringstream csv;
    reports::write_claims_csv(claims, csv);
    std::string text = csv.str();
    std::size_t count = 0;
    std::size_t pos = 0;
    const std::string row = "tn2_lower_statement";
    while ((pos = text.find(row, pos)) != std::string::npos) {
        ++count;
        pos += row.size();
    }
    require(count == 1, "expected exactly one statement-variant row");
    bool ok = false;
    for (const auto& c : claims)
        if (c.claim_id == "tn2_lower_statement")
            ok = c.status == "FAIL" && c.witness == "N=3";
    require(ok, "statement variant must FAIL with witness N=3");
}

void criterion11_zeta() {
    require(surface::zeta_minus_one(5) == make_rational(1, 30), "zeta(5) != 1/30");
    require(surface::zeta_minus_one(13) == make_rational(1, 6), "zeta(13) != 1/6");
    require(surface::zeta_minus_one(17) == make_rational(1, 3), "zeta(17) != 1/3");
}

void criterion12_surface_algebra() {
    double c = surface::exact_bound_coefficient();
    require(std::fabs(c - (4.0 + 2.0 * std::sqrt((7.0 + std::sqrt(13.0)) / 2.0))) == 0.0,
            "coefficient formula");
    require(c < 9.0, "coefficient not below 9");

    std::mt19937 rng(321);
    std::uniform_real_distribution<double> pos(0.01, 10.0);
    for (int i = 0; i < 1000; ++i) {
        double d2 = pos(rng);
        double fd = d2 - 2.0 * std::sqrt(d2 * d2);
        require(std::fabs(fd + d2) <= 1e-12 * d2, "f(d2) != -d2");
        double x = pos(rng);
        if (std::fabs(x - d2) < 1e-8) continue;
        require(x - 2.0 * std::sqrt(d2 * x) > -d2, "f(x) <= -d2 away from the minimum");
    }

    auto g = [](double delta, double d2) {
        return 2.0 * delta - 4.0 * d2 - 2.0 * std::sqrt(d2 * d2 + delta * d2);
    };
    for (double d2 : {0.25, 1.0, 2.5}) {
        double t = surface::nonneg_delta_threshold(d2);
        require(std::fabs(g(t, d2)) <= 1e-9, "threshold is not a root");
        require(g(t + 1e-6, d2) > 0.0 && g(t - 1e-6, d2) < 0.0, "no sign change");
    }
}

void criterion13_vdg() {
    for (std::int64_t p = 5; p <= 10000; p += 4) {
        if (!arith::is_prime(static_cast<std::uint64_t>(p))) continue;
        if (!(static_cast<double>(surface::sigma0_sum(p)) <= surface::sigma0_sum_upper(p)))
            throw Failure("sigma0 bound fails at p=" + std::to_string(p));
    }
}

void criterion14_determinism() {
    const char* cli = std::getenv("HZBOUND_CLI");
    require(cli != nullptr, "HZBOUND_CLI not set");
    auto tmp = std::filesystem::temp_directory_path();
    auto out1 = tmp / "hzbound_scan_jobs1.csv";
    auto out4 = tmp / "hzbound_scan_jobs4.csv";
    auto run = [&](int jobs, const std::filesystem::path& out) {
        std::string cmd = std::string("\"") + cli + "\" scan -p 13 --n-max 2000 --jobs " +
                          std::to_string(jobs) + " -o \"" + out.string() +
                          "\" --no-cache > /dev/null";
        require(std::system(cmd.c_str()) == 0, "scan run failed");
    };
    run(1, out1);
    run(4, out4);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(out1), b = slurp(out4);
    require(!a.empty(), "empty scan output");
    require(a == b, "outputs differ across worker counts");
    std::filesystem::remove(out1);
    std::filesystem::remove(out4);
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*fn)();
    };
    const Criterion criteria[] = {
        {"criterion 1: class-number oracle equivalence, |d| <= 10^4", criterion1_class_numbers},
        {"criterion 2: Hurwitz values to 10^4", criterion2_hurwitz},
        {"criterion 3: boundary identity at squares, p in {5,13,17}, m <= 200",
         criterion3_boundary_identity},
        {"criterion 4: Robin strictness to 10^6", criterion4_robin},
        {"criterion 5: Paley audit exceptions == {3}", criterion5_paley},
        {"criterion 6: unit-orbit closed forms at p=5", criterion6_orbit_sums},
        {"criterion 7: exact scan pinning, p=13, n_max=2000", criterion7_exact_scan},
        {"criterion 8: asymptotic floor, p in {5,13,17,29}, N <= 5000",
         criterion8_asymptotic_floor},
        {"criterion 9: nonnegative tail beyond p^{15/7}, p in {5,13}",
         criterion9_tail_nonnegative},
        {"criterion 10: statement-variant erratum with witness N=3",
         criterion10_statement_erratum},
        {"criterion 11: zeta_K(-1) exact values", criterion11_zeta},
        {"criterion 12: surface algebra", criterion12_surface_algebra},
        {"criterion 13: sigma0 sums below the bound to 10^4", criterion13_vdg},
        {"criterion 14: scan determinism across worker counts", criterion14_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        try {
            c.fn();
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
            std::printf("PASS %s (%.1fs)\n", c.name, secs.count());
        } catch (const std::exception& e) {
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
            std::printf("FAIL %s (%.1fs): %s\n", c.name, secs.count(), e.what());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
