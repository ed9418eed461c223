#include "biform/conic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "biform/errors.hpp"

namespace biform {

namespace {

i128 form_value(const std::array<i64, 3>& u, const std::array<i64, 3>& v) {
    i128 s = 0;
    for (int i = 0; i < 3; ++i) s += static_cast<i128>(u[i]) * v[i] * v[i];
    return s;
}

bool pairwise_coprime(const std::array<i64, 3>& v) {
    return std::gcd(std::abs(v[0]), std::abs(v[1])) == 1 &&
           std::gcd(std::abs(v[0]), std::abs(v[2])) == 1 &&
           std::gcd(std::abs(v[1]), std::abs(v[2])) == 1;
}

// Second intersection of the conic F = diag(u) with the line through the
// base point P and R = s*e_i + t*e_j. Quadratic in (s, t); never the zero
// vector when P_m != 0 for the index m not in {i, j}.
std::array<i64, 3> chord_point(const std::array<i64, 3>& u, const std::array<i64, 3>& P,
                               int i, int j, i64 s, i64 t) {
    i64 fr = u[i] * s * s + u[j] * t * t;
    i64 bil = u[i] * P[i] * s + u[j] * P[j] * t;
    std::array<i64, 3> R{0, 0, 0};
    R[i] = s;
    R[j] = t;
    std::array<i64, 3> y;
    for (int k = 0; k < 3; ++k) y[k] = fr * P[k] - 2 * bil * R[k];
    return y;
}

std::array<i64, 3> divide_content(std::array<i64, 3> v) {
    i64 g = std::gcd(std::gcd(std::abs(v[0]), std::abs(v[1])), std::abs(v[2]));
    if (g > 1) for (i64& x : v) x /= g;
    return v;
}

// Walk chords from base until the witness has nonzero coordinates and, when
// requested, pairwise coprime entries. The bad parameters form finitely many
// residue classes, so small (s, t) always suffice.
std::optional<std::array<i64, 3>> perturb_witness(const std::array<i64, 3>& u,
                                                  const std::array<i64, 3>& base,
                                                  bool need_pairwise_coprime) {
    int m = 0;
    while (m < 3 && base[m] == 0) ++m;
    if (m == 3) return std::nullopt;
    int i = (m + 1) % 3, j = (m + 2) % 3;
    for (i64 bound = 1; bound <= 64; ++bound) {
        for (i64 s = -bound; s <= bound; ++s) {
            for (i64 t = -bound; t <= bound; ++t) {
                if (std::max(std::abs(s), std::abs(t)) != bound) continue;
                if (std::gcd(std::abs(s), std::abs(t)) != 1) continue;
                auto w = divide_content(chord_point(u, base, i, j, s, t));
                if (w[0] == 0 || w[1] == 0 || w[2] == 0) continue;
                if (need_pairwise_coprime && !pairwise_coprime(w)) continue;
                if (form_value(u, w) != 0) throw oracle_bug("perturb_witness: chord point off the conic");
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace

ReducedForm reduce(const std::array<i64, 3>& raw, const FactorSieve& sieve) {
    for (i64 x : raw) {
        if (x == 0) throw contract_violation("reduce: zero coefficient");
    }
    std::array<i64, 3> a = raw;
    i64 g = std::gcd(std::gcd(std::abs(a[0]), std::abs(a[1])), std::abs(a[2]));
    for (i64& x : a) x /= g;

    ReducedForm rf;
    // Strip square parts: u_i = ell_i * z_i^2, and a reduced solution V maps
    // back through v_i = z_j * z_k * V_i.
    std::array<i64, 3> z;
    for (int i = 0; i < 3; ++i) {
        auto parts = squarefree_decompose(a[i], sieve);
        a[i] = parts.ell;
        z[i] = parts.z;
    }
    for (int i = 0; i < 3; ++i) rf.square_scales[i] = z[(i + 1) % 3] * z[(i + 2) % 3];

    // Push shared prime factors onto the third coordinate until pairwise
    // coprime; each step divides the coefficient product by p.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < 3 && !changed; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            i64 gij = std::gcd(std::abs(a[i]), std::abs(a[j]));
            if (gij == 1) continue;
            i64 p = sieve.factor(gij)[0].first;
            a[i] /= p;
            a[j] /= p;
            a[k] *= p;
            rf.square_scales[k] *= p;
            changed = true;
        }
    }
    rf.coeffs = a;
    return rf;
}

namespace {

// Is n a square modulo every odd prime of m? (m squarefree, gcd(n, m) = 1.)
bool qr_mod_squarefree(i64 n, i64 m, const FactorSieve& sieve) {
    for (const auto& [p, e] : sieve.factor(std::abs(m))) {
        (void)e;
        if (p == 2) continue;
        if (jacobi(n % p, p) != 1) return false;
    }
    return true;
}

bool legendre_criterion(const std::array<i64, 3>& c, const FactorSieve& sieve) {
    if ((c[0] > 0) == (c[1] > 0) && (c[1] > 0) == (c[2] > 0)) return false;
    return qr_mod_squarefree(-c[1] * c[2], c[0], sieve) &&
           qr_mod_squarefree(-c[0] * c[2], c[1], sieve) &&
           qr_mod_squarefree(-c[0] * c[1], c[2], sieve);
}

} // namespace

bool is_soluble(const std::array<i64, 3>& u, const FactorSieve& sieve) {
    return legendre_criterion(reduce(u, sieve).coeffs, sieve);
}

std::optional<std::array<i64, 3>> find_solution(const std::array<i64, 3>& u, const FactorSieve& sieve) {
    ReducedForm rf = reduce(u, sieve);
    if (!legendre_criterion(rf.coeffs, sieve)) return std::nullopt;

    const auto& c = rf.coeffs;
    // Holzer: a soluble reduced form has a solution with v_i^2 <= |c_j c_k|.
    i64 ha = static_cast<i64>(isqrt64(static_cast<u64>(std::abs(c[1] * c[2])))) + 1;
    i64 hb = static_cast<i64>(isqrt64(static_cast<u64>(std::abs(c[0] * c[2])))) + 1;
    std::array<i64, 3> witness{0, 0, 0};
    bool found = false;
    for (i64 va = 0; va <= ha && !found; ++va) {
        for (i64 vb = 0; vb <= hb && !found; ++vb) {
            if (va == 0 && vb == 0) continue;
            i64 s = c[0] * va * va + c[1] * vb * vb;
            if (s % c[2] != 0) continue;
            i64 t = -s / c[2];
            if (t < 0) continue;
            u64 vc;
            if (!is_square64(static_cast<u64>(t), vc)) continue;
            witness = {va, vb, static_cast<i64>(vc)};
            found = true;
        }
    }
    if (!found) throw oracle_bug("find_solution: criterion soluble but Holzer search empty");

    // Move off coordinate lines on the reduced form if needed.
    std::array<i64, 3> V = witness;
    if (V[0] == 0 || V[1] == 0 || V[2] == 0) {
        auto moved = perturb_witness(c, V, false);
        if (!moved) throw oracle_bug("find_solution: no nonzero-coordinate point near base");
        V = *moved;
    }

    std::array<i64, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = rf.square_scales[i] * V[i];
    v = divide_content(v);
    if (form_value(u, v) != 0) throw oracle_bug("find_solution: mapped witness off the conic");
    if (!pairwise_coprime(v)) {
        auto moved = perturb_witness(u, v, true);
        if (!moved) throw oracle_bug("find_solution: no pairwise-coprime witness found");
        v = *moved;
    }
    return v;
}

} // namespace biform
