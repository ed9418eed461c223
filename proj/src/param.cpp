// Parametrization of point pairs on x0 y0^2 + x1 y1^2 + x2 y2^2 = 0 by
// gcd-extraction, and the direct 15-variable tuple count with the identity
// N(B) = T(B) / 4.

#include "biform/param.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "biform/errors.hpp"
#include "biform/sharding.hpp"

namespace biform {

namespace {

inline i64 gcd3(i64 a, i64 b, i64 c) {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

i128 equation_value(const ParamTuple& t) {
    i128 s = 0;
    for (int i = 0; i < 3; ++i) {
        s += static_cast<i128>(t.f[i]) * t.u[i] * t.v[i] * t.v[i];
    }
    return s;
}

i64 exact_div(i64 num, i64 den, const char* step) {
    if (den == 0 || num % den != 0) {
        throw contract_violation(std::string("decompose: failed division at ") + step);
    }
    return num / den;
}

inline bool square_i64(i64 t, i64& root) {
    if (t < 0) return false;
    u64 r;
    if (!is_square64(static_cast<u64>(t), r)) return false;
    root = static_cast<i64>(r);
    return true;
}

} // namespace

ParamTuple decompose(const std::array<i64, 3>& x, const std::array<i64, 3>& y) {
    for (int i = 0; i < 3; ++i) {
        if (x[i] == 0 || y[i] == 0) throw contract_violation("decompose: zero coordinate");
    }
    if (gcd3(x[0], x[1], x[2]) != 1 || gcd3(y[0], y[1], y[2]) != 1) {
        throw contract_violation("decompose: pair not primitive");
    }
    i128 eq = 0;
    for (int i = 0; i < 3; ++i) eq += static_cast<i128>(x[i]) * y[i] * y[i];
    if (eq != 0) throw contract_violation("decompose: pair not on the variety");

    ParamTuple t;
    std::array<i64, 3> yp, xp, X;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        t.h[i] = std::gcd(std::abs(y[j]), std::abs(y[k]));
    }
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        yp[i] = exact_div(y[i], t.h[j] * t.h[k], "y_i / (h_j h_k)");
        xp[i] = exact_div(x[i], t.h[i] * t.h[i], "x_i / h_i^2");
    }
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        X[i] = std::gcd(std::abs(xp[j]), std::abs(xp[k]));
    }
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        t.u[i] = exact_div(xp[i], X[j] * X[k], "x_i' / (X_j X_k)");
        // Unique split X_i = f_i g_i^2, y_i' = f_i g_i v_i with gcd(g_i, v_i) = 1.
        t.g[i] = X[i] / std::gcd(X[i], std::abs(yp[i]));
        if (X[i] % (t.g[i] * t.g[i]) != 0) {
            throw contract_violation("decompose: X_i not divisible by g_i^2");
        }
        t.f[i] = X[i] / (t.g[i] * t.g[i]);
        t.v[i] = exact_div(yp[i], t.f[i] * t.g[i], "y_i' / (f_i g_i)");
        if (std::gcd(t.g[i], std::abs(t.v[i])) != 1) {
            throw contract_violation("decompose: split not coprime");
        }
    }
    return t;
}

std::pair<std::array<i64, 3>, std::array<i64, 3>> recompose(const ParamTuple& t) {
    std::array<i64, 3> x, y;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        bool ok = true;
        i128 xi = mul_checked(static_cast<i128>(t.h[i]) * t.h[i],
                              mul_checked(static_cast<i128>(t.f[j]) * t.g[j] * t.g[j],
                                          static_cast<i128>(t.f[k]) * t.g[k] * t.g[k], ok), ok);
        xi = mul_checked(xi, t.u[i], ok);
        i128 yi = static_cast<i128>(t.h[j]) * t.h[k] * t.f[i] * t.g[i] * t.v[i];
        if (!ok || xi > INT64_MAX || xi < INT64_MIN || yi > INT64_MAX || yi < INT64_MIN) {
            throw bound_too_large("recompose: coordinate overflow");
        }
        x[i] = static_cast<i64>(xi);
        y[i] = static_cast<i64>(yi);
    }
    return {x, y};
}

bool validate(const ParamTuple& t) {
    for (int i = 0; i < 3; ++i) {
        if (t.f[i] < 1 || t.g[i] < 1 || t.h[i] < 1) return false;
        if (t.u[i] == 0 || t.v[i] == 0) return false;
    }
    if (equation_value(t) != 0) return false;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            // gcd(f_i, f_j g_j h_i u_i v_j) = 1
            if (std::gcd(t.f[i], t.f[j]) != 1) return false;
            if (std::gcd(t.f[i], t.g[j]) != 1) return false;
            if (std::gcd(t.f[i], t.h[i]) != 1) return false;
            if (std::gcd(t.f[i], std::abs(t.u[i])) != 1) return false;
            if (std::gcd(t.f[i], std::abs(t.v[j])) != 1) return false;
            // gcd(g_i, g_j h_i u_i v_i v_j) = 1
            if (std::gcd(t.g[i], t.g[j]) != 1) return false;
            if (std::gcd(t.g[i], t.h[i]) != 1) return false;
            if (std::gcd(t.g[i], std::abs(t.u[i])) != 1) return false;
            if (std::gcd(t.g[i], std::abs(t.v[i])) != 1) return false;
            if (std::gcd(t.g[i], std::abs(t.v[j])) != 1) return false;
            // gcd(h_i, h_j v_i) = 1
            if (std::gcd(t.h[i], t.h[j]) != 1) return false;
            if (std::gcd(t.h[i], std::abs(t.v[i])) != 1) return false;
            // gcd(u_i, u_j) = gcd(v_i, v_j) = 1
            if (std::gcd(std::abs(t.u[i]), std::abs(t.u[j])) != 1) return false;
            if (std::gcd(std::abs(t.v[i]), std::abs(t.v[j])) != 1) return false;
        }
    }
    return true;
}

i128 tuple_height(const ParamTuple& t) {
    i128 hx = 0, hy = 0;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        i128 cx = static_cast<i128>(t.f[j]) * t.f[k] * t.g[j] * t.g[j] * t.g[k] * t.g[k] *
                  t.h[i] * t.h[i] * (t.u[i] < 0 ? -t.u[i] : t.u[i]);
        i128 cy = static_cast<i128>(t.f[i]) * t.g[i] * t.h[j] * t.h[k] * (t.v[i] < 0 ? -t.v[i] : t.v[i]);
        hx = std::max(hx, cx);
        hy = std::max(hy, cy);
    }
    return hx * hx * hy;
}

namespace {

// Inner (u, v) enumeration for fixed (h, f, g). u runs with u0 > 0; each hit
// stands for both u signs and all eight v sign choices, hence weight 16.
i64 u_v_sweep(i64 B, const i64 h[3], const i64 f[3], const i64 g[3],
              const std::function<void(const ParamTuple&)>* visit) {
    i64 coef[3], yc[3];
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        coef[i] = f[j] * f[k] * g[j] * g[j] * g[k] * g[k] * h[i] * h[i];
        yc[i] = f[i] * g[i] * h[j] * h[k];
    }
    i64 yfloor = std::max({yc[0], yc[1], yc[2]});
    i64 hx_max = static_cast<i64>(isqrt64(static_cast<u64>(B / yfloor)));
    i64 U[3];
    for (int i = 0; i < 3; ++i) {
        if (coef[i] > hx_max) return 0;
        U[i] = hx_max / coef[i];
    }

    i64 total = 0;
    i64 u[3];
    for (u[0] = 1; u[0] <= U[0]; ++u[0]) {
        if (std::gcd(f[0], u[0]) != 1 || std::gcd(g[0], u[0]) != 1) continue;
        for (i64 au1 = 1; au1 <= U[1]; ++au1) {
            if (std::gcd(au1, u[0]) != 1) continue;
            if (std::gcd(f[1], au1) != 1 || std::gcd(g[1], au1) != 1) continue;
            for (int s1 = 1; s1 >= -1; s1 -= 2) {
                u[1] = s1 * au1;
                for (i64 au2 = 1; au2 <= U[2]; ++au2) {
                    if (std::gcd(au2, u[0]) != 1 || std::gcd(au2, au1) != 1) continue;
                    if (std::gcd(f[2], au2) != 1 || std::gcd(g[2], au2) != 1) continue;
                    for (int s2 = 1; s2 >= -1; s2 -= 2) {
                        u[2] = s2 * au2;
                        if (u[1] > 0 && u[2] > 0) continue;  // definite, no v
                        i64 hx = std::max({coef[0] * u[0], coef[1] * au1, coef[2] * au2});
                        i64 ylim = B / (hx * hx);
                        i64 V[3];
                        bool live = true;
                        for (int i = 0; i < 3; ++i) {
                            V[i] = ylim / yc[i];
                            if (V[i] < 1) { live = false; break; }
                        }
                        if (!live) continue;

                        // Solve for the coordinate with the largest box.
                        int c = 0;
                        for (int i = 1; i < 3; ++i) {
                            if (V[i] > V[c]) c = i;
                        }
                        int a = (c + 1) % 3, b = (c + 2) % 3;
                        i64 wa = f[a] * u[a], wb = f[b] * u[b], wc = f[c] * u[c];
                        i64 gprod = g[0] * g[1] * g[2];
                        // Divisibility and the square test reject almost all
                        // candidates; the gcd battery runs only on survivors.
                        i64 fa_chk = f[b] * f[c] * gprod * h[a];
                        i64 fb_chk = f[a] * f[c] * gprod * h[b];
                        for (i64 va = 1; va <= V[a]; ++va) {
                            if (fa_chk != 1 && (std::gcd(va, f[b] * f[c]) != 1 ||
                                                std::gcd(va, gprod) != 1 || std::gcd(va, h[a]) != 1)) continue;
                            i64 sa = wa * va * va;
                            for (i64 vb = 1; vb <= V[b]; ++vb) {
                                i64 s = sa + wb * vb * vb;
                                if (s % wc != 0) continue;
                                i64 t = -s / wc;
                                if (t < 1) continue;
                                i64 vc;
                                if (!square_i64(t, vc)) continue;
                                if (vc > V[c]) continue;
                                if (std::gcd(vb, va) != 1) continue;
                                if (fb_chk != 1 && (std::gcd(vb, f[a] * f[c]) != 1 ||
                                                    std::gcd(vb, gprod) != 1 || std::gcd(vb, h[b]) != 1)) continue;
                                if (std::gcd(vc, va) != 1 || std::gcd(vc, vb) != 1) continue;
                                if (std::gcd(vc, f[a] * f[b]) != 1) continue;
                                if (std::gcd(vc, gprod) != 1 || std::gcd(vc, h[c]) != 1) continue;
                                total += 16;
                                if (visit) {
                                    ParamTuple t0;
                                    for (int i = 0; i < 3; ++i) {
                                        t0.f[i] = f[i];
                                        t0.g[i] = g[i];
                                        t0.h[i] = h[i];
                                    }
                                    i64 vmag[3];
                                    vmag[a] = va; vmag[b] = vb; vmag[c] = vc;
                                    for (int su = 1; su >= -1; su -= 2) {
                                        for (int sv = 0; sv < 8; ++sv) {
                                            for (int i = 0; i < 3; ++i) {
                                                t0.u[i] = su * u[i];
                                                t0.v[i] = (sv >> i) & 1 ? -vmag[i] : vmag[i];
                                            }
                                            (*visit)(t0);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return total;
}

// Shared enumeration core. Counts tuples, optionally materializing each.
i64 tuple_sweep(i64 B, int shard, int shards, const std::function<void(const ParamTuple&)>* visit) {
    const i64 SB = static_cast<i64>(isqrt64(static_cast<u64>(B)));
    i64 total = 0;

    i64 h[3], f[3], g[3];
    for (h[0] = 1; h[0] * h[0] <= SB; ++h[0])
    for (h[1] = 1; h[1] * h[1] <= SB; ++h[1]) {
        if (std::gcd(h[0], h[1]) != 1) continue;
        for (h[2] = 1; h[2] * h[2] <= SB; ++h[2]) {
            if (std::gcd(h[2], h[0]) != 1 || std::gcd(h[2], h[1]) != 1) continue;

            i64 f0max = SB / std::max(h[1] * h[1], h[2] * h[2]);
            for (f[0] = 1; f[0] <= f0max; ++f[0]) {
                if (std::gcd(f[0], h[0]) != 1) continue;
                i64 f1max = std::min(SB / (h[0] * h[0]), SB / (f[0] * h[2] * h[2]));
                for (f[1] = 1; f[1] <= f1max; ++f[1]) {
                    if (std::gcd(f[1], f[0]) != 1 || std::gcd(f[1], h[1]) != 1) continue;
                    i64 f2max = std::min(SB / (f[1] * h[0] * h[0]), SB / (f[0] * h[1] * h[1]));
                    for (f[2] = 1; f[2] <= f2max; ++f[2]) {
                        if (std::gcd(f[2], f[0]) != 1 || std::gcd(f[2], f[1]) != 1) continue;
                        if (std::gcd(f[2], h[2]) != 1) continue;

                        u64 key = mix64((static_cast<u64>(h[0]) << 48) ^ (static_cast<u64>(h[1]) << 36) ^
                                        (static_cast<u64>(h[2]) << 24) ^ static_cast<u64>(f[0]));
                        key = key * 1000003u + static_cast<u64>(f[1]) * 257u + static_cast<u64>(f[2]);
                        if (!shard_owns(key, shard, shards)) continue;

                        i64 g0cap = std::min(SB / (f[0] * f[2] * h[1] * h[1]), SB / (f[0] * f[1] * h[2] * h[2]));
                        for (g[0] = 1; g[0] * g[0] <= g0cap; ++g[0]) {
                            if (std::gcd(g[0], h[0]) != 1) continue;
                            if (std::gcd(g[0], f[1]) != 1 || std::gcd(g[0], f[2]) != 1) continue;
                            i64 g1cap = std::min(SB / (f[1] * f[2] * h[0] * h[0]),
                                                 SB / (f[0] * f[1] * g[0] * g[0] * h[2] * h[2]));
                            for (g[1] = 1; g[1] * g[1] <= g1cap; ++g[1]) {
                                if (std::gcd(g[1], g[0]) != 1 || std::gcd(g[1], h[1]) != 1) continue;
                                if (std::gcd(g[1], f[0]) != 1 || std::gcd(g[1], f[2]) != 1) continue;
                                i64 g2cap = std::min(SB / (f[1] * f[2] * g[1] * g[1] * h[0] * h[0]),
                                                     SB / (f[0] * f[2] * g[0] * g[0] * h[1] * h[1]));
                                for (g[2] = 1; g[2] * g[2] <= g2cap; ++g[2]) {
                                    if (std::gcd(g[2], g[0]) != 1 || std::gcd(g[2], g[1]) != 1) continue;
                                    if (std::gcd(g[2], h[2]) != 1) continue;
                                    if (std::gcd(g[2], f[0]) != 1 || std::gcd(g[2], f[1]) != 1) continue;

                                    total += u_v_sweep(B, h, f, g, visit);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return total;
}

} // namespace

i64 count_tuples(i64 B, int shards) {
    if (B < 1) throw contract_violation("count_tuples: B must be positive");
    if (B > kTupleBoundGuard) throw bound_too_large("count_tuples: B exceeds enumeration guard");
    return sum_over_shards(shards, [&](int s) { return tuple_sweep(B, s, shards, nullptr); });
}

void enumerate_tuples(i64 B, const std::function<void(const ParamTuple&)>& visit) {
    if (B < 1) throw contract_violation("enumerate_tuples: B must be positive");
    if (B > kTupleBoundGuard) throw bound_too_large("enumerate_tuples: B exceeds enumeration guard");
    tuple_sweep(B, 0, 1, &visit);
}

} // namespace biform
