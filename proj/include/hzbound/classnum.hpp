#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <vector>

#include "hzbound/rational.hpp"

namespace hzbound::classnum {

/// True iff d is a valid negative discriminant: d <= -3 and d = 0 or 1 (mod 4).
bool is_valid_discriminant(std::int64_t d);

/// Class number h(d) of positive definite primitive binary integral quadratic
/// forms of discriminant d < 0, counted over the reduced domain
/// |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a,b,c) = 1.
/// Throws std::invalid_argument for invalid discriminants.
std::int64_t class_number(std::int64_t d);

/// h(-k) for every k in [0, limit] as a dense table (0 at invalid k).
/// Single pass over all reduced forms, so bulk queries avoid per-discriminant
/// factoring work.
std::vector<std::uint16_t> class_number_table(std::int64_t limit);

/// h'(d): 1/3 at d = -3, 1/2 at d = -4, h(d) otherwise.
Rational h_prime(std::int64_t d);

/// Hurwitz-type class number H(n): -1/12 at n = 0, else the sum of h'(-n/d^2)
/// over square divisors d^2 | n, where residues n/d^2 = 1, 2 (mod 4)
/// contribute nothing. Throws std::invalid_argument for n < 0.
Rational hurwitz(std::int64_t n);

// Memoizing class-number store. Two layers: a dense table for bulk scans
// (populated by ensure_hurwitz) and a sparse map for one-off queries, which
// is what gets persisted to disk. Reads take a shared lock; concurrent use
// after a warm-up pass is read-only.
class ClassNumberCache {
public:
    ClassNumberCache() = default;
    ClassNumberCache(const ClassNumberCache&) = delete;
    ClassNumberCache& operator=(const ClassNumberCache&) = delete;

    std::int64_t class_number(std::int64_t d);
    Rational h_prime(std::int64_t d);
    Rational hurwitz(std::int64_t n);

    /// 12*H(n) as an integer (denominators of H divide 12).
    std::int64_t hurwitz12(std::int64_t n);

    /// Precompute dense h(-k) and 12*H(k) tables for all k <= limit.
    void ensure_hurwitz(std::int64_t limit);
    std::int64_t dense_limit() const { return dense_limit_; }

    /// TSV persistence of the sparse entries: one "<disc>\t<h>" line per
    /// discriminant, ascending |disc|. Parse errors name the line number.
    void load_tsv(const std::filesystem::path& path);
    void store_tsv(const std::filesystem::path& path) const;

    std::size_t sparse_size() const;
    bool dirty() const { return dirty_; }

private:
    std::int64_t lookup_or_compute(std::int64_t k);  // k = |d|

    std::vector<std::uint16_t> dense_h_;
    std::vector<std::int32_t> dense_h12_;  // 12*H(k), dense
    std::int64_t dense_limit_ = -1;
    std::map<std::int64_t, std::int64_t> sparse_;  // |d| -> h
    bool dirty_ = false;
    mutable std::shared_mutex mutex_;
};

/// Largest supported dense-table limit (uint16 form counts stay in range).
inline constexpr std::int64_t kDenseLimitMax = 30'000'000;

}  // namespace hzbound::classnum
