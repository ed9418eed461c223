#include "biform/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "biform/errors.hpp"
#include "biform/lattice2d.hpp"

namespace biform {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::array<i64, 3> floor_bounds(const Box3& box) {
    std::array<i64, 3> f;
    for (int i = 0; i < 3; ++i) {
        if (box.bounds[i] < 1.0) throw contract_violation("box bound below 1");
        f[i] = static_cast<i64>(std::floor(box.bounds[i]));
    }
    return f;
}

bool is_primitive3(const std::array<i64, 3>& v) {
    return std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2])) == 1;
}

void require_pairwise_coprime_nonzero(const std::array<i64, 3>& u, const char* who) {
    for (i64 x : u) {
        if (x == 0) throw contract_violation(std::string(who) + ": zero coefficient");
    }
    if (std::gcd(std::abs(u[0]), std::abs(u[1])) != 1 ||
        std::gcd(std::abs(u[0]), std::abs(u[2])) != 1 ||
        std::gcd(std::abs(u[1]), std::abs(u[2])) != 1) {
        throw contract_violation(std::string(who) + ": coefficients not pairwise coprime");
    }
}

} // namespace

i64 count_linear_box(const std::array<i64, 3>& w, const Box3& box) {
    if (!is_primitive3(w)) throw contract_violation("count_linear_box: w not primitive");
    auto bounds = floor_bounds(box);
    PlaneLattice L = kernel_lattice(w);
    i64 count = 0;
    for_each_in_box(L, bounds, [&](const std::array<i64, 3>&, i64 a, i64 b) {
        if (std::gcd(std::abs(a), std::abs(b)) == 1) ++count;
    });
    return count;
}

double linear_box_bound(const std::array<i64, 3>& w, const Box3& box) {
    double num = box.bounds[0] * box.bounds[1] * box.bounds[2];
    double den = 0.0;
    for (int i = 0; i < 3; ++i) den = std::max(den, std::abs(static_cast<double>(w[i])) * box.bounds[i]);
    return 12.0 * kPi * num / den + 4.0;
}

i64 count_quadratic_box(const std::array<i64, 3>& u, const Box3& box) {
    require_pairwise_coprime_nonzero(u, "count_quadratic_box");
    auto V = floor_bounds(box);
    // Solve for the coordinate with the largest box; iterate magnitudes of
    // the other two. Sign classes contribute 2^(#nonzero coordinates).
    int k = 0;
    for (int i = 1; i < 3; ++i) {
        if (V[i] > V[k]) k = i;
    }
    int i = (k + 1) % 3, j = (k + 2) % 3;
    i64 count = 0;
    for (i64 mi = 0; mi <= V[i]; ++mi) {
        for (i64 mj = 0; mj <= V[j]; ++mj) {
            i64 s = u[i] * mi * mi + u[j] * mj * mj;
            if (s % u[k] != 0) continue;
            i64 t = -s / u[k];
            if (t < 0) continue;
            u64 mk;
            if (!is_square64(static_cast<u64>(t), mk)) continue;
            if (static_cast<i64>(mk) > V[k]) continue;
            std::array<i64, 3> m;
            m[i] = mi; m[j] = mj; m[k] = static_cast<i64>(mk);
            if (m[0] == 0 && m[1] == 0 && m[2] == 0) continue;
            if (!is_primitive3(m)) continue;
            int nonzero = (m[0] != 0) + (m[1] != 0) + (m[2] != 0);
            count += i64{1} << nonzero;
        }
    }
    return count;
}

double quadratic_box_envelope(const std::array<i64, 3>& u, const Box3& box, i64 tau_of_product) {
    double prod = box.bounds[0] * box.bounds[1] * box.bounds[2];
    double coeff = std::abs(static_cast<double>(u[0]) * u[1] * u[2]);
    return std::cbrt(prod / coeff + 1.0) * static_cast<double>(tau_of_product);
}

double m_eps(const Box3& box, double eps) {
    if (eps <= 0) throw contract_violation("m_eps: eps must be positive");
    double best = 0.0;
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        double term = std::pow(box.bounds[i] * box.bounds[j], -0.5 + eps) * std::log(2.0 * box.bounds[k]);
        best = std::max(best, term);
    }
    return 1.0 + best;
}

i64 solvable_weight_sum(const std::array<i64, 3>& f, const Box3& box,
                        const FactorSieve& sieve, const SolubleOracle& oracle) {
    require_pairwise_coprime_nonzero(f, "solvable_weight_sum");
    auto U = floor_bounds(box);
    i64 sum = 0;
    for (i64 a0 = -U[0]; a0 <= U[0]; ++a0) {
        if (a0 == 0) continue;
        for (i64 a1 = -U[1]; a1 <= U[1]; ++a1) {
            if (a1 == 0 || std::gcd(std::abs(a0), std::abs(a1)) != 1) continue;
            for (i64 a2 = -U[2]; a2 <= U[2]; ++a2) {
                if (a2 == 0) continue;
                if (std::gcd(std::abs(a0), std::abs(a2)) != 1 ||
                    std::gcd(std::abs(a1), std::abs(a2)) != 1) continue;
                if (!oracle({f[0] * a0, f[1] * a1, f[2] * a2})) continue;
                i64 prod = std::abs(a0 * a1 * a2);
                sum += i64{1} << divisor_stats(prod, sieve).first;
            }
        }
    }
    return sum;
}

i64 count_mixed_box(const std::array<i64, 3>& f, const Box3& ubox, const Box3& vbox) {
    require_pairwise_coprime_nonzero(f, "count_mixed_box");
    auto U = floor_bounds(ubox);
    auto V = floor_bounds(vbox);
    i64 count = 0;
    // The equation is linear in u once |v| is fixed; sweep the kernel
    // lattice of (f0 v0^2, f1 v1^2, f2 v2^2) over the u box. Sign choices
    // of v are all equivalent, hence the factor 8.
    for (i64 v0 = 1; v0 <= V[0]; ++v0) {
        for (i64 v1 = 1; v1 <= V[1]; ++v1) {
            for (i64 v2 = 1; v2 <= V[2]; ++v2) {
                std::array<i64, 3> w{f[0] * v0 * v0, f[1] * v1 * v1, f[2] * v2 * v2};
                i64 g = std::gcd(std::gcd(std::abs(w[0]), std::abs(w[1])), std::abs(w[2]));
                for (i64& x : w) x /= g;
                PlaneLattice L = kernel_lattice(w);
                const std::array<i64, 3> vv{v0, v1, v2};
                for_each_in_box(L, U, [&](const std::array<i64, 3>& u, i64, i64) {
                    if (u[0] == 0 || u[1] == 0 || u[2] == 0) return;
                    for (int a = 0; a < 3; ++a) {
                        int b = (a + 1) % 3;
                        if (std::gcd(std::abs(u[a] * vv[a]), std::abs(u[b] * vv[b])) != 1) return;
                    }
                    count += 8;
                });
            }
        }
    }
    return count;
}

double mixed_box_envelope(const std::array<i64, 3>& f, const Box3& ubox, const Box3& vbox, double eps) {
    double fprod = std::abs(static_cast<double>(f[0]) * f[1] * f[2]);
    double uprod = ubox.bounds[0] * ubox.bounds[1] * ubox.bounds[2];
    double vprod = vbox.bounds[0] * vbox.bounds[1] * vbox.bounds[2];
    return std::pow(fprod, eps) * std::pow(uprod, 2.0 / 3.0) * std::cbrt(vprod) * m_eps(ubox, eps);
}

std::vector<Box3> dyadic_grid(int maxpow) {
    if (maxpow < 0 || maxpow > 20) throw contract_violation("dyadic_grid: maxpow out of range");
    std::vector<Box3> grid;
    grid.reserve(static_cast<std::size_t>(maxpow + 1) * (maxpow + 1) * (maxpow + 1));
    for (int a = 0; a <= maxpow; ++a) {
        for (int b = 0; b <= maxpow; ++b) {
            for (int c = 0; c <= maxpow; ++c) {
                grid.push_back(Box3{{std::ldexp(1.0, a), std::ldexp(1.0, b), std::ldexp(1.0, c)}});
            }
        }
    }
    return grid;
}

} // namespace biform
