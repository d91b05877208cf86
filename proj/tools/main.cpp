#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hzbound/arith.hpp"
#include "hzbound/bounds.hpp"
#include "hzbound/classnum.hpp"
#include "hzbound/curves.hpp"
#include "hzbound/errors.hpp"
#include "hzbound/rational.hpp"
#include "hzbound/reports.hpp"
#include "hzbound/surface.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;

struct CacheSettings {
    std::string path = "classnum.tsv";
    bool disabled = false;
};

void cache_open(hzbound::classnum::ClassNumberCache& cache, const CacheSettings& s) {
    if (s.disabled) return;
    if (std::filesystem::exists(s.path)) cache.load_tsv(s.path);
}

void cache_close(hzbound::classnum::ClassNumberCache& cache, const CacheSettings& s) {
    if (s.disabled || !cache.dirty()) return;
    cache.store_tsv(s.path);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hzbound;

    CLI::App app{"Self-intersection numbers of Hirzebruch-Zagier curves and "
                 "negativity bounds for Hilbert modular surfaces"};
    app.require_subcommand(1);

    CacheSettings cache_settings;
    app.add_option("--cache", cache_settings.path, "Class-number cache file")
        ->capture_default_str();
    app.add_flag("--no-cache", cache_settings.disabled, "Disable cache persistence");

    // classnum
    auto* cmd_classnum = app.add_subcommand("classnum", "Class number of a discriminant");
    std::int64_t disc = 0;
    cmd_classnum->add_option("-d", disc, "Discriminant (negative, = 0 or 1 mod 4)")
        ->required();

    // selfint
    auto* cmd_selfint = app.add_subcommand("selfint", "Self-intersection number T_N^2");
    std::int64_t si_p = 0, si_n = 0, si_a = 1;
    bool si_ip = false, si_override = false;
    double si_tol = 1e-10;
    cmd_selfint->add_option("-p", si_p, "Prime = 1 mod 4")->required();
    cmd_selfint->add_option("-N", si_n, "Index N of the curve")->required();
    cmd_selfint->add_option("--A", si_a, "Norm of the defining ideal");
    cmd_selfint->add_flag("--include-ip", si_ip, "Add the unit-orbit terms");
    cmd_selfint->add_option("--tol", si_tol, "Absolute tolerance of the orbit sums");
    cmd_selfint->add_flag("--allow-non-squarefree", si_override,
                          "Evaluate the formula for non-squarefree N");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "Scan the split-prime-product family");
    std::int64_t sc_p = 0, sc_nmax = 0;
    bool sc_ip = false;
    double sc_tol = 1e-10;
    int sc_jobs = 1;
    std::string sc_out;
    cmd_scan->add_option("-p", sc_p, "Prime = 1 mod 4")->required();
    cmd_scan->add_option("--n-max", sc_nmax, "Upper end of the scan")->required();
    cmd_scan->add_flag("--include-ip", sc_ip, "Add the unit-orbit terms");
    cmd_scan->add_option("--tol", sc_tol, "Absolute tolerance of the orbit sums");
    cmd_scan->add_option("--jobs", sc_jobs, "Worker threads")->capture_default_str();
    cmd_scan->add_option("-o", sc_out, "Output CSV path")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Audit the printed estimates");
    std::int64_t vf_p = 0, vf_nmax = 0, vf_dmax = 0;
    std::string vf_out;
    cmd_verify->add_option("-p", vf_p, "Prime = 1 mod 4")->required();
    cmd_verify->add_option("--n-max", vf_nmax, "Scan range")->required();
    cmd_verify->add_option("--d-max", vf_dmax, "Discriminant audit range")->required();
    cmd_verify->add_option("-o", vf_out, "Output CSV path")->required();

    // chern
    auto* cmd_chern = app.add_subcommand("chern", "Chern / zeta report for one prime");
    std::int64_t ch_p = 0;
    cmd_chern->add_option("-p", ch_p, "Prime = 1 mod 4")->required();

    // surface-bound
    auto* cmd_surface = app.add_subcommand("surface-bound", "Negativity bounds from d2");
    double sb_c2 = 0, sb_ksq = 0;
    std::optional<double> sb_delta, sb_sc, sb_rho;
    cmd_surface->add_option("--c2", sb_c2, "Second Chern class")->required();
    cmd_surface->add_option("--ksq", sb_ksq, "K_X^2")->required();
    cmd_surface->add_option("--delta", sb_delta, "Curve delta");
    cmd_surface->add_option("--sc", sb_sc, "S.C");
    cmd_surface->add_option("--rho", sb_rho, "rho(C)");

    // global options (--cache/--no-cache) may appear after the subcommand
    for (auto* sub : {cmd_classnum, cmd_selfint, cmd_scan, cmd_verify, cmd_chern, cmd_surface})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadArgs;
    }

    classnum::ClassNumberCache cache;
    try {
        if (*cmd_classnum) {
            cache_open(cache, cache_settings);
            std::cout << cache.class_number(disc) << '\n';
            cache_close(cache, cache_settings);
        } else if (*cmd_selfint) {
            cache_open(cache, cache_settings);
            curves::HzParams params(si_p, si_a);
            if (si_ip) {
                double v = curves::self_intersection_full(params, si_n, cache, si_tol,
                                                          si_override);
                std::cout << format_real(v) << " +/- " << format_real(si_tol) << '\n';
            } else {
                std::cout << format_rational(
                                 curves::self_intersection(params, si_n, cache, si_override))
                          << '\n';
            }
            cache_close(cache, cache_settings);
        } else if (*cmd_scan) {
            cache_open(cache, cache_settings);
            reports::ScanOptions opt;
            opt.p = sc_p;
            opt.n_max = sc_nmax;
            opt.include_ip = sc_ip;
            opt.tol = sc_tol;
            opt.jobs = sc_jobs;
            auto result = reports::run_scan(opt, cache);
            std::ofstream out(sc_out, std::ios::trunc);
            if (!out) throw IoError("cannot write " + sc_out);
            reports::write_scan_csv(result, out);
            if (!out) throw IoError("write failure on " + sc_out);
            std::cout << reports::scan_summary(result) << '\n';
            cache_close(cache, cache_settings);
        } else if (*cmd_verify) {
            cache_open(cache, cache_settings);
            reports::VerifyOptions opt;
            opt.p = vf_p;
            opt.n_max = vf_nmax;
            opt.d_max = vf_dmax;
            auto claims = reports::run_verify(opt, cache);
            std::ofstream out(vf_out, std::ios::trunc);
            if (!out) throw IoError("cannot write " + vf_out);
            reports::write_claims_csv(claims, out);
            if (!out) throw IoError("write failure on " + vf_out);
            std::size_t fails = 0;
            for (const auto& c : claims) fails += c.status == "FAIL";
            std::cout << "verify p=" << vf_p << " claims=" << claims.size()
                      << " findings=" << fails << '\n';
            cache_close(cache, cache_settings);
        } else if (*cmd_chern) {
            std::cout << reports::chern_report(ch_p);
        } else if (*cmd_surface) {
            surface::SurfaceData s(sb_c2, sb_ksq);
            std::cout << "d2: " << format_real(s.d2) << '\n';
            std::cout << "bound_nine: " << format_real(-9.0 * s.d2) << '\n';
            std::cout << "bound_exact_coefficient: "
                      << format_real(-surface::exact_bound_coefficient() * s.d2) << '\n';
            if (sb_delta || sb_sc || sb_rho) {
                if (!(sb_delta && sb_sc && sb_rho))
                    throw std::invalid_argument(
                        "surface-bound: --delta, --sc, --rho must be given together");
                std::cout << "chain_lower: "
                          << format_real(surface::self_intersection_chain_lower(
                                 *sb_delta, *sb_sc, *sb_rho, s.d2))
                          << '\n';
            }
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    }
    return kExitOk;
}
