#include "biform/lattice2d.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "biform/errors.hpp"

namespace biform {

namespace {

// ext_gcd(a, b) = (g, s, t) with s*a + t*b = g >= 0.
struct ExtGcd {
    i64 g, s, t;
};

ExtGcd ext_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

i128 dot(const std::array<i64, 3>& a, const std::array<i64, 3>& b) {
    i128 s = 0;
    for (int i = 0; i < 3; ++i) s += static_cast<i128>(a[i]) * b[i];
    return s;
}

} // namespace

PlaneLattice kernel_lattice(const std::array<i64, 3>& w) {
    i64 g = std::gcd(std::gcd(std::abs(w[0]), std::abs(w[1])), std::abs(w[2]));
    if (g != 1) throw contract_violation("kernel_lattice: w must be primitive");

    PlaneLattice L;
    auto [g1, a, b] = ext_gcd(w[0], w[1]);
    if (g1 == 0) {
        // w = (0, 0, +/-1)
        L.b1 = {1, 0, 0};
        L.b2 = {0, 1, 0};
        return L;
    }
    // t1 . w = 0 directly; t2 . w = w2*(a*w0 + b*w1) - g1*w2 = 0.
    L.b1 = {w[1] / g1, -w[0] / g1, 0};
    L.b2 = {a * w[2], b * w[2], -g1};
    gauss_reduce(L);
    return L;
}

void gauss_reduce(PlaneLattice& L) {
    auto norm2 = [](const std::array<i64, 3>& v) { return dot(v, v); };
    if (norm2(L.b1) > norm2(L.b2)) std::swap(L.b1, L.b2);
    while (true) {
        i128 d = dot(L.b1, L.b2);
        i128 n1 = norm2(L.b1);
        // Round d/n1 to nearest integer.
        i128 q2 = 2 * d;
        i128 q = (q2 >= 0 ? (q2 + n1) : (q2 - n1)) / (2 * n1);
        if (q != 0) {
            for (int i = 0; i < 3; ++i) L.b2[i] -= static_cast<i64>(q) * L.b1[i];
        }
        if (norm2(L.b2) >= n1) break;
        std::swap(L.b1, L.b2);
    }
}

void for_each_in_box(const PlaneLattice& L, const std::array<i64, 3>& bounds,
                     const std::function<void(const std::array<i64, 3>&, i64, i64)>& visit) {
    // beta = (b1_i u_j - b1_j u_i) / D_ij with D_ij = b1_i b2_j - b1_j b2_i,
    // so any index pair with a nonzero minor caps |beta|; same for alpha.
    i64 beta_max = -1, alpha_max = -1;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            i128 D = static_cast<i128>(L.b1[i]) * L.b2[j] - static_cast<i128>(L.b1[j]) * L.b2[i];
            if (D == 0) continue;
            i128 aD = D < 0 ? -D : D;
            i128 nb = static_cast<i128>(std::abs(L.b1[i])) * bounds[j] + static_cast<i128>(std::abs(L.b1[j])) * bounds[i];
            i128 na = static_cast<i128>(std::abs(L.b2[i])) * bounds[j] + static_cast<i128>(std::abs(L.b2[j])) * bounds[i];
            i64 bb = static_cast<i64>(nb / aD);
            i64 ab = static_cast<i64>(na / aD);
            if (beta_max < 0 || bb < beta_max) beta_max = bb;
            if (alpha_max < 0 || ab < alpha_max) alpha_max = ab;
        }
    }
    if (beta_max < 0) throw contract_violation("for_each_in_box: degenerate basis");

    for (i64 beta = -beta_max; beta <= beta_max; ++beta) {
        i64 lo = -alpha_max, hi = alpha_max;
        bool empty = false;
        for (int i = 0; i < 3 && !empty; ++i) {
            i128 off = static_cast<i128>(beta) * L.b2[i];
            if (L.b1[i] == 0) {
                if (off > bounds[i] || off < -static_cast<i128>(bounds[i])) empty = true;
                continue;
            }
            // |alpha*b1_i + off| <= bounds_i
            i128 lo_n = -static_cast<i128>(bounds[i]) - off;
            i128 hi_n = static_cast<i128>(bounds[i]) - off;
            // Divide by b1_i, flipping when negative. Values fit i64 after
            // division because alpha itself is bounded by alpha_max.
            i64 b = L.b1[i];
            i64 l, h;
            if (b > 0) {
                l = static_cast<i64>(lo_n >= 0 ? (lo_n + b - 1) / b : -((-lo_n) / b));
                h = static_cast<i64>(hi_n >= 0 ? hi_n / b : -((-hi_n + b - 1) / b));
            } else {
                b = -b;
                l = static_cast<i64>(hi_n >= 0 ? -(hi_n / b) : ((-hi_n) + b - 1) / b);
                h = static_cast<i64>(lo_n >= 0 ? -((lo_n + b - 1) / b) : (-lo_n) / b);
            }
            lo = std::max(lo, l);
            hi = std::min(hi, h);
            if (lo > hi) empty = true;
        }
        if (empty) continue;
        for (i64 alpha = lo; alpha <= hi; ++alpha) {
            if (alpha == 0 && beta == 0) continue;
            std::array<i64, 3> u;
            for (int i = 0; i < 3; ++i) u[i] = alpha * L.b1[i] + beta * L.b2[i];
            visit(u, alpha, beta);
        }
    }
}

} // namespace biform
