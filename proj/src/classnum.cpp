#include "hzbound/classnum.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hzbound/errors.hpp"

namespace hzbound::classnum {

bool is_valid_discriminant(std::int64_t d) {
    if (d > -3) return false;
    std::int64_t m = ((d % 4) + 4) % 4;
    return m == 0 || m == 1;
}

namespace {

void require_valid(std::int64_t d) {
    if (!is_valid_discriminant(d))
        throw std::invalid_argument("invalid discriminant " + std::to_string(d) +
                                    " (need d <= -3, d = 0 or 1 mod 4)");
}

std::int64_t h_prime12(std::int64_t k, std::int64_t h) {
    if (k == 3) return 4;
    if (k == 4) return 6;
    return 12 * h;
}

}  // namespace

std::int64_t class_number(std::int64_t d) {
    require_valid(d);
    std::int64_t D = -d;
    std::int64_t count = 0;
    for (std::int64_t b = D % 2; 3 * b * b <= D; b += 2) {
        std::int64_t ac = (D + b * b) / 4;
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            std::int64_t c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            count += (b == 0 || b == a || a == c) ? 1 : 2;
        }
    }
    return count;
}

std::vector<std::uint16_t> class_number_table(std::int64_t limit) {
    if (limit < 0) throw std::invalid_argument("class_number_table: negative limit");
    if (limit > kDenseLimitMax)
        throw std::invalid_argument("class_number_table: limit exceeds dense-table cap");
    std::vector<std::uint16_t> h(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t a = 1; 3 * a * a <= limit; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) {
            std::int64_t d = 4 * a * a - b * b;  // c = a
            if (d > limit) continue;
            std::int64_t g = std::gcd(a, b);
            if (g == 1) ++h[static_cast<std::size_t>(d)];
            std::uint16_t mult = (b == 0 || b == a) ? 1 : 2;
            std::int64_t stride = 4 * a;
            if (g == 1) {
                for (d += stride; d <= limit; d += stride)
                    h[static_cast<std::size_t>(d)] += mult;
            } else {
                std::int64_t primes[8];
                int np = 0;
                std::int64_t gg = g;
                for (std::int64_t q = 2; q * q <= gg; ++q) {
                    if (gg % q == 0) {
                        primes[np++] = q;
                        while (gg % q == 0) gg /= q;
                    }
                }
                if (gg > 1) primes[np++] = gg;
                std::int64_t c = a + 1;
                for (d += stride; d <= limit; d += stride, ++c) {
                    bool coprime = true;
                    for (int i = 0; i < np; ++i) {
                        if (c % primes[i] == 0) {
                            coprime = false;
                            break;
                        }
                    }
                    if (coprime) h[static_cast<std::size_t>(d)] += mult;
                }
            }
        }
    }
    return h;
}

Rational h_prime(std::int64_t d) {
    require_valid(d);
    if (d == -3) return make_rational(1, 3);
    if (d == -4) return make_rational(1, 2);
    return make_rational(class_number(d));
}

Rational hurwitz(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("hurwitz: argument must be >= 0");
    if (n == 0) return make_rational(-1, 12);
    std::int64_t acc12 = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % (d * d) != 0) continue;
        std::int64_t k = n / (d * d);
        std::int64_t m = k % 4;
        if (m == 1 || m == 2) continue;  // -k is not a discriminant
        acc12 += h_prime12(k, k <= 4 ? 0 : class_number(-k));
    }
    return make_rational(acc12, 12);
}

std::int64_t ClassNumberCache::lookup_or_compute(std::int64_t k) {
    {
        std::shared_lock lock(mutex_);
        if (k <= dense_limit_) return dense_h_[static_cast<std::size_t>(k)];
        auto it = sparse_.find(k);
        if (it != sparse_.end()) return it->second;
    }
    std::int64_t h = classnum::class_number(-k);
    std::unique_lock lock(mutex_);
    sparse_.emplace(k, h);
    dirty_ = true;
    return h;
}

std::int64_t ClassNumberCache::class_number(std::int64_t d) {
    require_valid(d);
    return lookup_or_compute(-d);
}

Rational ClassNumberCache::h_prime(std::int64_t d) {
    require_valid(d);
    if (d == -3) return make_rational(1, 3);
    if (d == -4) return make_rational(1, 2);
    return make_rational(lookup_or_compute(-d));
}

std::int64_t ClassNumberCache::hurwitz12(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("hurwitz: argument must be >= 0");
    if (n == 0) return -1;
    {
        std::shared_lock lock(mutex_);
        if (n <= dense_limit_) return dense_h12_[static_cast<std::size_t>(n)];
    }
    std::int64_t acc12 = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % (d * d) != 0) continue;
        std::int64_t k = n / (d * d);
        std::int64_t m = k % 4;
        if (m == 1 || m == 2) continue;
        acc12 += h_prime12(k, k <= 4 ? 0 : lookup_or_compute(k));
    }
    return acc12;
}

Rational ClassNumberCache::hurwitz(std::int64_t n) { return make_rational(hurwitz12(n), 12); }

void ClassNumberCache::ensure_hurwitz(std::int64_t limit) {
    {
        std::shared_lock lock(mutex_);
        if (limit <= dense_limit_) return;
    }
    auto h = class_number_table(limit);
    std::vector<std::int32_t> h12(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t k = 3; k <= limit; k += (k % 4 == 3) ? 1 : 3) {
        std::int64_t hp12 = h_prime12(k, h[static_cast<std::size_t>(k)]);
        for (std::int64_t d = 1; k * d * d <= limit; ++d)
            h12[static_cast<std::size_t>(k * d * d)] += static_cast<std::int32_t>(hp12);
    }
    std::unique_lock lock(mutex_);
    if (limit <= dense_limit_) return;
    dense_h_ = std::move(h);
    dense_h12_ = std::move(h12);
    dense_limit_ = limit;
}

std::size_t ClassNumberCache::sparse_size() const {
    std::shared_lock lock(mutex_);
    return sparse_.size();
}

void ClassNumberCache::load_tsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open cache file " + path.string());
    std::string line;
    std::size_t lineno = 0;
    std::map<std::int64_t, std::int64_t> entries;
    while (std::getline(in, line)) {
        ++lineno;
        auto fail = [&](const std::string& why) {
            throw ParseError("cache " + path.string() + ": parse error at line " +
                             std::to_string(lineno) + ": " + why);
        };
        auto tab = line.find('\t');
        if (tab == std::string::npos) fail("expected <disc>\\t<count>");
        std::int64_t d = 0, h = 0;
        try {
            std::size_t used = 0;
            d = std::stoll(line.substr(0, tab), &used);
            if (used != tab) fail("bad discriminant field");
            std::string rest = line.substr(tab + 1);
            h = std::stoll(rest, &used);
            if (used != rest.size()) fail("bad class-number field");
        } catch (const std::logic_error&) {
            fail("not an integer");
        }
        if (!is_valid_discriminant(d)) fail("not a valid discriminant");
        if (h < 1) fail("class number must be positive");
        if (!entries.emplace(-d, h).second) fail("duplicate discriminant");
    }
    std::unique_lock lock(mutex_);
    for (const auto& [k, h] : entries) {
        auto [it, inserted] = sparse_.emplace(k, h);
        if (!inserted && it->second != h)
            throw ParseError("cache " + path.string() + ": entry for " + std::to_string(-k) +
                             " conflicts with an existing value");
    }
    dirty_ = sparse_.size() != entries.size();
}

void ClassNumberCache::store_tsv(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + path.string());
    std::shared_lock lock(mutex_);
    for (const auto& [k, h] : sparse_) out << -k << '\t' << h << '\n';
    if (!out) throw IoError("write failure on cache file " + path.string());
}

}  // namespace hzbound::classnum
