// Three independent exact pipelines for the point count N(B) on the open
// subset of x0 y0^2 + x1 y1^2 + x2 y2^2 = 0:
//
//   brute: pairs are split by which side is larger. For H(y) <= H(x) the
//     pair loop runs over small y then the two free x coordinates; for
//     H(x) < H(y) it runs over small x then two free y coordinates, solving
//     the third coordinate by divisibility plus a perfect-square test.
//     Everything is plain integer scanning.
//
//   fiber: for each positive y the solutions x form a congruence class
//     modulo the square of the largest y coordinate. Small y are swept
//     directly; for large y the roles invert and the remaining two y
//     coordinates are enumerated as roots of q a^2 + r b^2 = 0 mod y_max^2
//     over all small coefficient pairs (q, r), which keeps the whole sweep
//     near-linear in B instead of cubic.
//
//   param: delegates to the 15-variable tuple count (param module), with
//     the exact identity N(B) = T(B) / 4.
//
// All vector-level counting uses the identity N(B) = 2 #{(x, y) : y > 0},
// with y positive primitive and x ranging over both signs.

#include "biform/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "biform/congruence.hpp"
#include "biform/errors.hpp"
#include "biform/lattice2d.hpp"
#include "biform/param.hpp"
#include "biform/sharding.hpp"

namespace biform {

namespace {

inline i64 gcd3(i64 a, i64 b, i64 c) {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

// Quick non-square rejection masks (quadratic residues mod 64 and 63).
struct SquareMasks {
    bool mod64[64] = {};
    bool mod63[63] = {};
    SquareMasks() {
        for (int i = 0; i < 64; ++i) mod64[(i * i) & 63] = true;
        for (int i = 0; i < 63; ++i) mod63[(i * i) % 63] = true;
    }
};
const SquareMasks kSq;

inline bool square_test(i64 t, i64& root) {
    if (t < 0) return false;
    if (!kSq.mod64[t & 63] || !kSq.mod63[t % 63]) return false;
    u64 r;
    if (!is_square64(static_cast<u64>(t), r)) return false;
    root = static_cast<i64>(r);
    return true;
}

i64 isqrt_floor(i64 n) { return n <= 0 ? 0 : static_cast<i64>(isqrt64(static_cast<u64>(n))); }

// ---------------------------------------------------------------------------
// brute, d = 2
// ---------------------------------------------------------------------------

// Pairs (x, y) with y > 0 primitive, x primitive with nonzero coordinates,
// H(y) <= H(x) and H(x)^2 H(y) <= B. Counted with the first free x
// coordinate positive, so each hit stands for the two vectors +/-x.
i64 brute_side_small_y(i64 B, int shard, int shards, const PointVisitor* visit) {
    i64 total = 0;
    for (i64 c = 1; c * c * c <= B; ++c) {
        i64 X = isqrt_floor(B / c);
        if (X < c) break;
        for (i64 y0 = 1; y0 <= c; ++y0) {
            if (!shard_owns(static_cast<u64>(c) * 2000003u + static_cast<u64>(y0), shard, shards)) continue;
            for (i64 y1 = 1; y1 <= c; ++y1) {
                i64 z_lo = (y0 == c || y1 == c) ? 1 : c;
                for (i64 y2 = z_lo; y2 <= c; ++y2) {
                    if (std::max({y0, y1, y2}) != c) continue;
                    if (gcd3(y0, y1, y2) != 1) continue;
                    const i64 y[3] = {y0, y1, y2};
                    int k = 0;
                    while (y[k] != c) ++k;
                    int pa = k == 0 ? 1 : 0;
                    int pb = k == 2 ? 1 : 2;
                    i64 m = c * c;
                    i64 qa = y[pa] * y[pa], qb = y[pb] * y[pb];
                    for (i64 xa = 1; xa <= X; ++xa) {
                        i64 ta = xa * qa;
                        for (i64 xb = -X; xb <= X; ++xb) {
                            if (xb == 0) continue;
                            i64 s = ta + xb * qb;
                            if (s == 0 || s % m != 0) continue;
                            i64 xk = -s / m;
                            i64 axk = std::abs(xk);
                            if (axk > X) continue;
                            i64 hx = std::max({xa, std::abs(xb), axk});
                            if (hx < c) continue;
                            if (gcd3(xa, xb, xk) != 1) continue;
                            total += 2;
                            if (visit) {
                                std::array<i64, 3> xv;
                                xv[pa] = xa; xv[pb] = xb; xv[k] = xk;
                                std::array<i64, 3> yv{y0, y1, y2};
                                for (int s0 = 0; s0 < 4; ++s0) {
                                    std::array<i64, 3> ys{yv[0], s0 & 1 ? -yv[1] : yv[1], s0 & 2 ? -yv[2] : yv[2]};
                                    (*visit)(normalize(xv), ProjPoint{ys});
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

// Pairs with H(x) < H(y): small x outside, two free y coordinates inside,
// the third recovered by divisibility and a square test. Residue classes
// modulo the largest x coordinate prune the inner loop.
i64 brute_side_small_x(i64 B, int shard, int shards, const PointVisitor* visit) {
    i64 total = 0;
    std::vector<i64> sq;
    for (i64 xi = 1; xi * xi * xi < B; ++xi) {
        i64 Y = B / (xi * xi);
        if (Y <= xi) break;
        if (static_cast<i64>(sq.size()) < Y + 1) {
            i64 old = static_cast<i64>(sq.size());
            sq.resize(static_cast<std::size_t>(Y + 1));
            for (i64 t = old; t <= Y; ++t) sq[static_cast<std::size_t>(t)] = t * t;
        }
        for (i64 x0 = 1; x0 <= xi; ++x0) {
            for (i64 x1a = 1; x1a <= xi; ++x1a) {
                for (int s1 = -1; s1 <= 1; s1 += 2) {
                    i64 x1 = s1 * x1a;
                    if (!shard_owns((static_cast<u64>(xi) << 40) ^ (static_cast<u64>(x0) << 20) ^ static_cast<u64>(x1 + xi), shard, shards)) continue;
                    for (i64 x2a = 1; x2a <= xi; ++x2a) {
                        for (int s2 = -1; s2 <= 1; s2 += 2) {
                            i64 x2 = s2 * x2a;
                            const i64 x[3] = {x0, x1, x2};
                            if (std::max({x0, x1a, x2a}) != xi) continue;
                            if (x1 > 0 && x2 > 0) continue;  // positive y needs mixed signs
                            if (gcd3(x0, x1, x2) != 1) continue;
                            int k = 0;
                            for (int i = 1; i < 3; ++i) {
                                if (std::abs(x[i]) > std::abs(x[k])) k = i;
                            }
                            int pa = k == 0 ? 1 : 0;
                            int pb = k == 2 ? 1 : 2;
                            i64 m = x[k], am = std::abs(m);
                            // Residues r with x_pb * r^2 = target (mod |x_k|).
                            std::vector<std::vector<i64>> classes(static_cast<std::size_t>(am));
                            for (i64 r = 0; r < am; ++r) {
                                i64 v = (x[pb] % am) * ((r * r) % am) % am;
                                if (v < 0) v += am;
                                classes[static_cast<std::size_t>(v)].push_back(r);
                            }
                            for (i64 ya = 1; ya <= Y; ++ya) {
                                i64 ta = x[pa] * sq[static_cast<std::size_t>(ya)];
                                i64 target = (-ta) % am;
                                if (target < 0) target += am;
                                for (i64 r : classes[static_cast<std::size_t>(target)]) {
                                    for (i64 yb = r == 0 ? am : r; yb <= Y; yb += am) {
                                        i64 s = ta + x[pb] * sq[static_cast<std::size_t>(yb)];
                                        i64 t = -s / m;
                                        if (t < 1) continue;
                                        i64 yk;
                                        if (!square_test(t, yk)) continue;
                                        if (yk > Y) continue;
                                        i64 hy = std::max({ya, yb, yk});
                                        if (hy <= xi) continue;
                                        if (gcd3(ya, yb, yk) != 1) continue;
                                        total += 2;
                                        if (visit) {
                                            std::array<i64, 3> yv;
                                            yv[pa] = ya; yv[pb] = yb; yv[k] = yk;
                                            std::array<i64, 3> xv{x0, x1, x2};
                                            for (int s0 = 0; s0 < 4; ++s0) {
                                                std::array<i64, 3> ys{yv[0], s0 & 1 ? -yv[1] : yv[1], s0 & 2 ? -yv[2] : yv[2]};
                                                (*visit)(normalize(xv), ProjPoint{ys});
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
    }
    return total;
}

// ---------------------------------------------------------------------------
// brute, d = 1 (cross-check channel; the equation is sign-sensitive in y,
// so normalized y with mixed signs are enumerated directly)
// ---------------------------------------------------------------------------

i64 brute_linear(i64 B, const PointVisitor* visit) {
    i64 S = isqrt_floor(B);  // H(x) H(y) <= floor(sqrt(B))
    i64 classes = 0;
    // H(y) <= H(x)
    for (i64 c = 1; c * c <= S; ++c) {
        i64 X = S / c;
        for (i64 y0 = 1; y0 <= c; ++y0) {
            for (i64 y1 = -c; y1 <= c; ++y1) {
                if (y1 == 0) continue;
                for (i64 y2 = -c; y2 <= c; ++y2) {
                    if (y2 == 0) continue;
                    if (std::max({y0, std::abs(y1), std::abs(y2)}) != c) continue;
                    if (gcd3(y0, y1, y2) != 1) continue;
                    const i64 y[3] = {y0, y1, y2};
                    int k = 0;
                    for (int i = 1; i < 3; ++i) {
                        if (std::abs(y[i]) > std::abs(y[k])) k = i;
                    }
                    int pa = k == 0 ? 1 : 0;
                    int pb = k == 2 ? 1 : 2;
                    for (i64 xa = 1; xa <= X; ++xa) {
                        for (i64 xb = -X; xb <= X; ++xb) {
                            if (xb == 0) continue;
                            i64 s = xa * y[pa] + xb * y[pb];
                            if (s == 0 || s % y[k] != 0) continue;
                            i64 xk = -s / y[k];
                            if (std::abs(xk) > X) continue;
                            i64 hx = std::max({xa, std::abs(xb), std::abs(xk)});
                            if (hx < c || hx * c > S) continue;
                            if (gcd3(xa, xb, xk) != 1) continue;
                            ++classes;
                            if (visit) {
                                std::array<i64, 3> xv;
                                xv[pa] = xa; xv[pb] = xb; xv[k] = xk;
                                (*visit)(normalize(xv), ProjPoint{{y0, y1, y2}});
                            }
                        }
                    }
                }
            }
        }
    }
    // H(x) < H(y)
    for (i64 xi = 1; xi * xi <= S; ++xi) {
        i64 Y = S / xi;
        if (Y <= xi) break;
        for (i64 x0 = 1; x0 <= xi; ++x0) {
            for (i64 x1 = -xi; x1 <= xi; ++x1) {
                if (x1 == 0) continue;
                for (i64 x2 = -xi; x2 <= xi; ++x2) {
                    if (x2 == 0) continue;
                    if (std::max({x0, std::abs(x1), std::abs(x2)}) != xi) continue;
                    if (gcd3(x0, x1, x2) != 1) continue;
                    const i64 x[3] = {x0, x1, x2};
                    int k = 0;
                    for (int i = 1; i < 3; ++i) {
                        if (std::abs(x[i]) > std::abs(x[k])) k = i;
                    }
                    int pa = k == 0 ? 1 : 0;
                    int pb = k == 2 ? 1 : 2;
                    i64 a_lo = pa == 0 ? 1 : -Y;
                    for (i64 ya = a_lo; ya <= Y; ++ya) {
                        if (ya == 0) continue;
                        i64 b_lo = pb == 0 ? 1 : -Y;
                        for (i64 yb = b_lo; yb <= Y; ++yb) {
                            if (yb == 0) continue;
                            i64 s = x[pa] * ya + x[pb] * yb;
                            if (s == 0 || s % x[k] != 0) continue;
                            i64 yk = -s / x[k];
                            if (yk == 0 || std::abs(yk) > Y) continue;
                            if (k == 0 && yk < 0) continue;  // normalized y
                            i64 hy = std::max({std::abs(ya), std::abs(yb), std::abs(yk)});
                            if (hy <= xi) continue;
                            if (gcd3(ya, yb, yk) != 1) continue;
                            ++classes;
                            if (visit) {
                                std::array<i64, 3> yv;
                                yv[pa] = ya; yv[pb] = yb; yv[k] = yk;
                                (*visit)(ProjPoint{{x0, x1, x2}}, ProjPoint{yv});
                            }
                        }
                    }
                }
            }
        }
    }
    return classes;
}

// ---------------------------------------------------------------------------
// fiber pipeline
// ---------------------------------------------------------------------------

// Vector solutions x (both signs, nonzero coordinates, primitive) of
// x . (y0^2, y1^2, y2^2) = 0 with |x_i| <= X, for positive y.
i64 fiber_vector_count(const std::array<i64, 3>& y, i64 X) {
    if (X <= 0) return 0;
    int k = 0;
    for (int i = 1; i < 3; ++i) {
        if (y[i] > y[k]) k = i;
    }
    // Pivot (k, i): invert y_i^2 modulo y_k^2. Prefer the largest modulus.
    int order[3] = {k, -1, -1};
    {
        int a = k == 0 ? 1 : 0, b = k == 2 ? 1 : 2;
        if (y[a] >= y[b]) { order[1] = a; order[2] = b; }
        else { order[1] = b; order[2] = a; }
    }
    for (int ki : order) {
        for (int ii = 0; ii < 3; ++ii) {
            if (ii == ki) continue;
            if (std::gcd(y[ii], y[ki]) != 1) continue;
            int jj = 3 - ki - ii;
            i64 m = y[ki] * y[ki];
            i64 A = (y[ii] * y[ii]) % m;
            i64 Bv = (y[jj] * y[jj]) % m;
            i64 ratio = m == 1 ? 0 : static_cast<i64>((static_cast<i128>(m - Bv) * inv_mod(A, m)) % m);
            i64 count = 0;
            for (i64 xj = -X; xj <= X; ++xj) {
                if (xj == 0) continue;
                i64 base = m == 1 ? 0 : static_cast<i64>(((static_cast<i128>(ratio) * xj) % m + m) % m);
                i64 xi = base - ((base + X) / m) * m;
                for (; xi <= X; xi += m) {
                    if (xi == 0) continue;
                    i64 s = xi * y[ii] * y[ii] + xj * y[jj] * y[jj];
                    if (s == 0) continue;
                    i64 xk = -s / m;
                    if (std::abs(xk) > X) continue;
                    if (gcd3(xi, xj, xk) != 1) continue;
                    ++count;
                }
            }
            return count;
        }
    }
    // No coprime pivot pair (e.g. y = (6, 10, 15)): kernel-lattice sweep.
    std::array<i64, 3> w{y[0] * y[0], y[1] * y[1], y[2] * y[2]};
    PlaneLattice L = kernel_lattice(w);
    i64 count = 0;
    for_each_in_box(L, {X, X, X}, [&](const std::array<i64, 3>& x, i64 a, i64 b) {
        if (x[0] == 0 || x[1] == 0 || x[2] == 0) return;
        if (std::gcd(std::abs(a), std::abs(b)) != 1) return;
        ++count;
    });
    return count;
}

// Sweep over all positive primitive y with H(y) <= cut.
i64 fiber_small_heights(i64 B, i64 cut, int shard, int shards) {
    i64 total = 0;
    for (i64 c = 1; c <= cut && c <= B; ++c) {
        i64 X = isqrt_floor(B / c);
        if (X == 0) break;
        for (i64 y0 = 1; y0 <= c; ++y0) {
            if (!shard_owns(static_cast<u64>(c) * 1000003u + static_cast<u64>(y0), shard, shards)) continue;
            for (i64 y1 = 1; y1 <= c; ++y1) {
                i64 z_lo = (y0 == c || y1 == c) ? 1 : c;
                for (i64 y2 = z_lo; y2 <= c; ++y2) {
                    if (std::max({y0, y1, y2}) != c) continue;
                    if (gcd3(y0, y1, y2) != 1) continue;
                    total += fiber_vector_count({y0, y1, y2}, X);
                }
            }
        }
    }
    return total;
}

// Sweep over y with H(y) = c > cut: for each position k of the maximum and
// each small coefficient pair (q, r) at the free positions, the remaining
// coordinates are exactly the box solutions of q a^2 + r b^2 = 0 mod c^2.
i64 fiber_large_heights(i64 B, i64 cut, int shard, int shards, const FactorSieve& sieve) {
    i64 total = 0;
    for (i64 c = cut + 1; c <= B; ++c) {
        i64 X = isqrt_floor(B / c);
        if (X == 0) break;
        bool any = false;
        for (int k = 0; k < 3; ++k) {
            if (shard_owns(static_cast<u64>(c) * 3u + static_cast<u64>(k), shard, shards)) { any = true; break; }
        }
        if (!any) continue;
        auto fct = sieve.factor(c);
        const i64 m2 = c * c;
        for (int k = 0; k < 3; ++k) {
            if (!shard_owns(static_cast<u64>(c) * 3u + static_cast<u64>(k), shard, shards)) continue;
            i64 Wa = (k > 0) ? c - 1 : c;   // positions before k stay below the maximum
            i64 Wb = (k > 1) ? c - 1 : c;
            if (Wa < 1 || Wb < 1) continue;
            for (i64 q = 1; q <= X; ++q) {
                for (i64 r = -X; r <= X; ++r) {
                    if (r == 0) continue;
                    for_each_congruence_pair(q, r, c, fct, Wa, Wb, true, [&](i64 a, i64 b) {
                        if (std::gcd(std::gcd(a, b), c) != 1) return;
                        i64 s = q * a * a + r * b * b;
                        if (s == 0) return;
                        i64 xk = -s / m2;
                        if (xk == 0 || std::abs(xk) > X) return;
                        if (gcd3(q, r, xk) != 1) return;
                        total += 2;  // x and -x
                    });
                }
            }
        }
    }
    return total;
}

} // namespace

const char* method_name(CountMethod m) {
    switch (m) {
        case CountMethod::brute: return "brute";
        case CountMethod::fiber: return "fiber";
        case CountMethod::param: return "param";
    }
    return "?";
}

CountMethod method_from_name(const std::string& name) {
    if (name == "brute") return CountMethod::brute;
    if (name == "fiber") return CountMethod::fiber;
    if (name == "param") return CountMethod::param;
    throw contract_violation("unknown method: " + name);
}

CountRecord count_brute(i64 B, const VarietyParams& params, int shards) {
    if (B < 1) throw contract_violation("count_brute: B must be positive");
    if (B > kBruteBoundGuard) throw bound_too_large("count_brute: B exceeds enumeration guard");
    if (params.d != 1 && params.d != 2) throw contract_violation("count_brute: d must be 1 or 2");
    auto t0 = std::chrono::steady_clock::now();
    i64 n;
    if (params.d == 2) {
        n = 2 * sum_over_shards(shards, [&](int s) {
            return brute_side_small_y(B, s, shards, nullptr) + brute_side_small_x(B, s, shards, nullptr);
        });
    } else {
        n = brute_linear(B, nullptr);
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return CountRecord{B, "brute", n, dt, shards};
}

i64 count_fiber(const ProjPoint& y, i64 Xmax) {
    if (!is_normalized(y)) throw contract_violation("count_fiber: y not normalized");
    for (i64 v : y.coords) {
        if (v == 0) throw contract_violation("count_fiber: zero y coordinate");
    }
    if (Xmax < 1) return 0;
    std::array<i64, 3> ay{std::abs(y.coords[0]), std::abs(y.coords[1]), std::abs(y.coords[2])};
    return fiber_vector_count(ay, Xmax) / 2;
}

i64 count_fiber_linear(const ProjPoint& y, i64 Xmax) {
    if (!is_normalized(y)) throw contract_violation("count_fiber_linear: y not normalized");
    for (i64 v : y.coords) {
        if (v == 0) throw contract_violation("count_fiber_linear: zero y coordinate");
    }
    if (Xmax < 1) return 0;
    PlaneLattice L = kernel_lattice(y.coords);
    i64 vectors = 0;
    for_each_in_box(L, {Xmax, Xmax, Xmax}, [&](const std::array<i64, 3>& x, i64 a, i64 b) {
        if (x[0] == 0 || x[1] == 0 || x[2] == 0) return;
        if (std::gcd(std::abs(a), std::abs(b)) != 1) return;
        ++vectors;
    });
    return vectors / 2;
}

i64 fiber_point_count(i64 B, int shards, const FactorSieve& sieve, i64 cut) {
    if (B < 1) throw contract_violation("fiber_point_count: B must be positive");
    if (B > kFiberBoundGuard) throw bound_too_large("fiber: B exceeds guard");
    if (B > sieve.limit()) throw sieve_too_small("fiber: sieve limit below B");
    if (cut < 1) cut = 1;
    return 2 * sum_over_shards(shards, [&](int s) {
        return fiber_small_heights(B, cut, s, shards) +
               fiber_large_heights(B, cut, s, shards, sieve);
    });
}

CountRecord count_total(i64 B, CountMethod method, int shards, const FactorSieve& sieve) {
    if (B < 1) throw contract_violation("count_total: B must be positive");
    if (shards < 1) throw contract_violation("count_total: shards must be positive");
    auto t0 = std::chrono::steady_clock::now();
    i64 n = 0;
    switch (method) {
        case CountMethod::brute:
            return count_brute(B, VarietyParams{}, shards);
        case CountMethod::fiber: {
            i64 cut = static_cast<i64>(std::cbrt(static_cast<double>(B)));
            while (cut * cut * cut > B) --cut;
            while ((cut + 1) * (cut + 1) * (cut + 1) <= B) ++cut;
            n = fiber_point_count(B, shards, sieve, std::max<i64>(cut, 1));
            break;
        }
        case CountMethod::param: {
            i64 tuples = count_tuples(B, shards);
            if (tuples % 4 != 0) throw oracle_bug("count_total: tuple count not divisible by 4");
            n = tuples / 4;
            break;
        }
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return CountRecord{B, method_name(method), n, dt, shards};
}

i64 sk_exact(const std::array<i64, 3>& y, i64 B, i64 k) {
    for (i64 v : y) {
        if (v < 1) throw contract_violation("sk_exact: y must be positive");
    }
    if (k < 1 || B < 1) throw contract_violation("sk_exact: B and k must be positive");
    if (std::gcd(y[0], y[2]) != 1) throw contract_violation("sk_exact: gcd(y0, y2) must be 1");
    // x_i'^2 y2 <= B / (4 k^2) for i in {0, 1}; x2' is unconstrained.
    i64 L = isqrt_floor(B / (4 * k * k * y[2]));
    if (L == 0) return 0;
    i64 m = y[2] * y[2];
    i64 q0 = (y[0] * y[0]) % m, q1 = (y[1] * y[1]) % m;
    i64 ratio = m == 1 ? 0 : static_cast<i64>((static_cast<i128>(m - q1) * inv_mod(q0, m)) % m);
    i64 count = 0;
    for (i64 x1 = -L; x1 <= L; ++x1) {
        if (x1 == 0) continue;
        i64 base = m == 1 ? 0 : static_cast<i64>(((static_cast<i128>(ratio) * x1) % m + m) % m);
        i64 x0 = base - ((base + L) / m) * m;
        for (; x0 <= L; x0 += m) {
            if (x0 == 0) continue;
            i64 s = x0 * y[0] * y[0] + x1 * y[1] * y[1];
            if (s == 0) continue;  // x2' = 0
            ++count;
        }
    }
    return count;
}

double sk_mainterm(const std::array<i64, 3>& y, i64 B, i64 k) {
    return static_cast<double>(B) / (static_cast<double>(k) * k * y[2] * y[2] * y[2]);
}

i64 restricted_lower_count(i64 B) {
    if (B < 64) throw contract_violation("restricted_lower_count: B must be >= 64");
    i64 R = 1;
    while ((R + 1) * (R + 1) * (R + 1) * (R + 1) * (R + 1) * (R + 1) <= B) ++R;
    i64 total = 0;
    for (i64 y2 = 3; y2 <= R; ++y2) {
        i64 m = y2 * y2;
        i64 L = isqrt_floor(B / (4 * y2));
        if (L == 0) continue;
        for (i64 y1 = 2; y1 < y2; ++y1) {
            for (i64 y0 = 1; y0 < y1; ++y0) {
                if (std::gcd(y0, y2) != 1) continue;
                i64 q0 = (y0 * y0) % m, q1 = (y1 * y1) % m;
                i64 ratio = static_cast<i64>((static_cast<i128>(m - q1) * inv_mod(q0, m)) % m);
                for (i64 x1 = -L; x1 <= L; ++x1) {
                    if (x1 == 0) continue;
                    i64 base = static_cast<i64>(((static_cast<i128>(ratio) * x1) % m + m) % m);
                    i64 x0 = base - ((base + L) / m) * m;
                    for (; x0 <= L; x0 += m) {
                        if (x0 == 0) continue;
                        i64 s = x0 * y0 * y0 + x1 * y1 * y1;
                        if (s == 0) continue;
                        i64 x2 = -s / m;
                        if (gcd3(x0, x1, x2) != 1) continue;
                        ++total;
                    }
                }
            }
        }
    }
    return 12 * total;
}

void enumerate_points(i64 B, const VarietyParams& params, const PointVisitor& visit) {
    if (B < 1) throw contract_violation("enumerate_points: B must be positive");
    if (B > kBruteBoundGuard) throw bound_too_large("enumerate_points: B exceeds enumeration guard");
    if (params.d == 2) {
        brute_side_small_y(B, 0, 1, &visit);
        brute_side_small_x(B, 0, 1, &visit);
    } else if (params.d == 1) {
        brute_linear(B, &visit);
    } else {
        throw contract_violation("enumerate_points: d must be 1 or 2");
    }
}

} // namespace biform
