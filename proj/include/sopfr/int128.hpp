#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sopfr {

using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v > 0) {
        buf[--pos] = char('0' + int(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

inline std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(u128(-v));
    return to_string(u128(v));
}

// Parses a plain decimal string; rejects empty input, junk and overflow.
inline std::optional<u128> parse_u128(std::string_view s) {
    if (s.empty()) return std::nullopt;
    constexpr u128 max = ~u128{0};
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        unsigned d = unsigned(c - '0');
        if (v > (max - d) / 10) return std::nullopt;
        v = v * 10 + d;
    }
    return v;
}

// Exact floor square root.
inline uint64_t isqrt(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = uint64_t(std::sqrt(double(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// Deterministic conversion; exact for values below 2^53, correctly split above.
inline double to_double(u128 v) {
    return double(uint64_t(v >> 64)) * 18446744073709551616.0 + double(uint64_t(v));
}

inline double to_double(i128 v) {
    return v < 0 ? -to_double(u128(-v)) : to_double(u128(v));
}

}  // namespace sopfr
