#pragma once

#include <cstdint>
#include <vector>

#include "sopfr/int128.hpp"

namespace sopfr {

struct PrimePower {
    uint64_t prime;
    uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Exact prime factorization: product of prime^exponent equals n,
// primes strictly increasing, exponents >= 1. n == 1 has no factors.
struct Factorization {
    uint64_t n = 1;
    std::vector<PrimePower> factors;
};

// Smallest-prime-factor lookup over a contiguous window [lo, hi].
// The entry for 1 is a reserved zero sentinel ("unit").
class SpfTable {
public:
    static constexpr uint64_t kUnitSentinel = 0;

    SpfTable(uint64_t lo, uint64_t hi, std::vector<uint64_t> spf)
        : lo_(lo), hi_(hi), spf_(std::move(spf)) {}

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }
    bool contains(uint64_t m) const { return m >= lo_ && m <= hi_; }

    // m must lie in [lo, hi]. Returns kUnitSentinel for m == 1.
    uint64_t spf(uint64_t m) const { return spf_[m - lo_]; }

private:
    uint64_t lo_;
    uint64_t hi_;
    std::vector<uint64_t> spf_;
};

// 2^26 entries (512 MiB of 64-bit slots). Larger windows belong to the
// segmented sweep driver.
inline constexpr uint64_t kSpfTableMaxEntries = uint64_t{1} << 26;

// Builds the SPF table for [lo, hi]. Throws resource_error when the window
// exceeds max_entries, std::domain_error on an invalid range.
SpfTable build_spf_table(uint64_t lo, uint64_t hi,
                         uint64_t max_entries = kSpfTableMaxEntries);

// Trial-division factorization (wheel 2, 3, 6k+-1). Exact for any 64-bit n;
// intended for isolated queries up to ~1e14 (sqrt(n) <= 1e7 divisions).
Factorization factorize(uint64_t n);

// Table-backed factorization; n must lie in the table window. Falls back to
// trial division for cofactors that drop below the window.
Factorization factorize(uint64_t n, const SpfTable& table);

// Sum of prime factors with repetition (A001414): sum of exponent * prime.
// sopfr(1) == 0. Completely additive.
uint64_t sopfr(uint64_t n);
uint64_t sopfr(uint64_t n, const SpfTable& table);

// Sum of distinct prime factors (A008472). sopf(1) == 0.
uint64_t sopf(uint64_t n);
uint64_t sopf(uint64_t n, const SpfTable& table);

}  // namespace sopfr
