#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hzbound/classnum.hpp"
#include "hzbound/rational.hpp"

namespace hzbound::reports {

struct ScanOptions {
    std::int64_t p = 0;
    std::int64_t n_max = 0;
    bool include_ip = false;
    double tol = 1e-10;
    int jobs = 1;
};

struct ScanRecord {
    std::int64_t N = 0;
    bool eligible = true;
    Rational tn2;             // compact-mode exact value
    double tn2_real = 0.0;    // full value when include_ip is set
    Rational sigma_floor;     // -sigma_1(N)/6
    double lemma2_statement = 0.0;
    double lemma2_proof = 0.0;
    bool viol_statement = false;
    bool viol_proof = false;
};

struct ScanResult {
    ScanOptions options;
    std::vector<ScanRecord> rows;
    bool has_min = false;
    std::size_t argmin_index = 0;
    double floor = 0.0;     // asymptotic negativity floor at this p
    double p_15_7 = 0.0;    // p^{15/7}
};

/// Evaluate every split-prime-product N <= n_max. Rows are ordered by N and
/// byte-identical across worker counts (records are merged by index).
ScanResult run_scan(const ScanOptions& options, classnum::ClassNumberCache& cache);

void write_scan_csv(const ScanResult& result, std::ostream& out);
std::string scan_summary(const ScanResult& result);

struct ClaimStatus {
    std::string claim_id;
    std::string parameters;
    std::string status;   // PASS, FAIL, or SKIPPED
    std::string witness;  // counterexample, empty on PASS
};

struct VerifyOptions {
    std::int64_t p = 0;
    std::int64_t n_max = 0;
    std::int64_t d_max = 0;
};

/// Audit every printed estimate against exact values. Claim failures are
/// findings, not errors; the claim table is the output.
std::vector<ClaimStatus> run_verify(const VerifyOptions& options,
                                    classnum::ClassNumberCache& cache);

void write_claims_csv(const std::vector<ClaimStatus>& claims, std::ostream& out);

inline constexpr const char* kClaimSchemaVersion = "1";

/// Chern / zeta report for one prime.
std::string chern_report(std::int64_t p);

}  // namespace hzbound::reports
