#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace biform {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Checked i128 multiply; sets ok=false on overflow instead of wrapping.
inline i128 mul_checked(i128 a, i128 b, bool& ok) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) ok = false;
    return r;
}

inline i128 add_checked(i128 a, i128 b, bool& ok) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) ok = false;
    return r;
}

// Floor of sqrt for nonnegative 64-bit values, exact.
inline u64 isqrt64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// True iff n is a perfect square; root returned through r.
inline bool is_square64(u64 n, u64& r) {
    r = isqrt64(n);
    return r * r == n;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = 48;
    while (u > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string s(buf + pos, buf + 48);
    return neg ? "-" + s : s;
}

} // namespace biform
