#include "biform/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "biform/arith.hpp"
#include "biform/errors.hpp"

namespace biform {

i64 inv_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 old_r = a % m, r = m;
    if (old_r < 0) old_r += m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw contract_violation("inv_mod: arguments are not coprime");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<u64>((static_cast<unsigned __int128>(result) * base) % mod);
        base = static_cast<u64>((static_cast<unsigned __int128>(base) * base) % mod);
        exp >>= 1;
    }
    return result;
}

namespace {

i64 mul_mod(i64 a, i64 b, i64 m) {
    i128 t = static_cast<i128>(a) * b % m;
    if (t < 0) t += m;
    return static_cast<i64>(t);
}

// Tonelli-Shanks mod an odd prime; requires jacobi(D, p) = 1.
i64 sqrt_mod_prime(i64 D, i64 p) {
    D %= p;
    if (D < 0) D += p;
    if (p % 4 == 3) return static_cast<i64>(pow_mod(D, (p + 1) / 4, p));
    i64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    i64 z = 2;
    while (jacobi(z, p) != -1) ++z;
    i64 m = s;
    i64 cc = static_cast<i64>(pow_mod(z, q, p));
    i64 t = static_cast<i64>(pow_mod(D, q, p));
    i64 r = static_cast<i64>(pow_mod(D, (q + 1) / 2, p));
    while (t != 1) {
        i64 t2 = t;
        int i = 0;
        while (t2 != 1) { t2 = mul_mod(t2, t2, p); ++i; }
        i64 b = cc;
        for (i64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        m = i;
        cc = mul_mod(b, b, p);
        t = mul_mod(t, cc, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

i64 pow_i64(i64 p, int k) {
    i64 r = 1;
    while (k-- > 0) r *= p;
    return r;
}

} // namespace

std::vector<i64> sqrt_mod_odd_prime_power(i64 D, i64 p, int k) {
    i64 pk = pow_i64(p, k);
    D %= pk;
    if (D < 0) D += pk;
    if (jacobi(D % p, p) != 1) return {};
    i64 r = sqrt_mod_prime(D, p);
    // Hensel: double the precision until it covers p^k.
    i64 mod = p;
    while (mod < pk) {
        i64 next = mod <= pk / mod ? mod * mod : pk;
        // r <- r - (r^2 - D) * inv(2r)  (mod next)
        i128 val = (static_cast<i128>(r) * r - D) % next;
        if (val < 0) val += next;
        i64 inv2r = inv_mod(2 * (r % next) % next, next);
        r = static_cast<i64>(((static_cast<i128>(r) - static_cast<i128>(val) * inv2r) % next + next) % next);
        mod = next;
    }
    r %= pk;
    if (r < 0) r += pk;
    i64 other = pk - r;
    if (r == other) return {r};
    return {std::min(r, other), std::max(r, other)};
}

std::vector<i64> sqrt_mod_two_power(i64 D, int k) {
    i64 pk = pow_i64(2, k);
    D %= pk;
    if (D < 0) D += pk;
    if (D % 2 == 0) throw contract_violation("sqrt_mod_two_power: D must be odd");
    if (k == 1) return {1};
    if (k == 2) {
        if (D % 4 != 1) return {};
        return {1, 3};
    }
    if (D % 8 != 1) return {};
    // Lift bit by bit from r = 1 (any odd square is 1 mod 8).
    i64 r = 1;
    for (int j = 3; j < k; ++j) {
        i64 mod_next = pow_i64(2, j + 1);
        if (((static_cast<i128>(r) * r - D) >> j) & 1) r += pow_i64(2, j - 1);
        r %= mod_next;
    }
    i64 half = pk / 2;
    std::vector<i64> roots{r % pk, (pk - r) % pk, (r + half) % pk, (pk - r + half) % pk};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

// One residue family of solutions at a single prime power.
struct PrimeFamily {
    int va = 0;        // valuation of a: exact when `exact`, minimum otherwise
    int vb = 0;
    bool exact = false;
    i64 link_mod = 1;  // p^k of the unit link a' = rho * b', or 1 when free
    i64 rho = 0;
};

// Families of q*a^2 + r*b^2 = 0 (mod p^(2e)).
std::vector<PrimeFamily> prime_families(i64 q, i64 r, i64 p, int e) {
    int m = 2 * e;
    auto val_of = [&](i64 x) {
        int v = 0;
        while (v < m && x % p == 0) { x /= p; ++v; }
        return v;  // capped at m; enough for the analysis below
    };
    int A = val_of(std::abs(q));
    int B = val_of(std::abs(r));
    i64 pm = pow_i64(p, m);
    i64 qu = q; for (int i = 0; i < A; ++i) qu /= p;
    i64 ru = r; for (int i = 0; i < B; ++i) ru /= p;

    std::vector<PrimeFamily> out;
    // Deep family: both terms vanish mod p^m. Covers all higher valuations.
    PrimeFamily deep;
    deep.va = (A >= m) ? 0 : (m - A + 1) / 2;
    deep.vb = (B >= m) ? 0 : (m - B + 1) / 2;
    out.push_back(deep);

    // Balanced families: A + 2a = B + 2b = w < m with unit link.
    for (int a = 0; A + 2 * a < m; ++a) {
        int w = A + 2 * a;
        if ((w - B) % 2 != 0 || w < B) continue;
        int b = (w - B) / 2;
        int k = m - w;
        i64 pk = pow_i64(p, k);
        // u^2 = D v^2 (mod p^k) with D = -ru/qu.
        i64 D = mul_mod(-ru % pk, inv_mod(((qu % pk) + pk) % pk, pk), pk);
        std::vector<i64> roots = (p == 2) ? sqrt_mod_two_power(D, k)
                                          : sqrt_mod_odd_prime_power(D, p, k);
        for (i64 rho : roots) {
            PrimeFamily f;
            f.va = a;
            f.vb = b;
            f.exact = true;
            f.link_mod = pk;
            f.rho = rho;
            out.push_back(f);
        }
    }
    (void)pm;
    return out;
}

// Gauss-reduced walk over one plane lattice {(x, y) : x = R*y (mod M)}
// scaled by (Sa, Sb), restricted to [1, Wa] x [1, Wb].
struct Vec2 {
    i64 x, y;
};

void enumerate_family(i64 Sa, i64 Sb, i64 M, i64 R, i64 Wa, i64 Wb,
                      const std::vector<std::pair<i64, int>>& exact_primes,
                      const std::function<void(i64, i64)>& visit) {
    i64 A = Wa / Sa;  // a' range [1, A]
    i64 B = Wb / Sb;
    if (A <= 0 || B <= 0) return;

    Vec2 u{M, 0}, v{R % M, 1};
    // Gauss reduction in the plane.
    auto n2 = [](const Vec2& w) { return static_cast<i128>(w.x) * w.x + static_cast<i128>(w.y) * w.y; };
    if (n2(u) < n2(v)) std::swap(u, v);
    while (true) {
        i128 d = static_cast<i128>(u.x) * v.x + static_cast<i128>(u.y) * v.y;
        i128 nv = n2(v);
        i128 q2 = 2 * d;
        i128 qq = (q2 >= 0 ? (q2 + nv) : (q2 - nv)) / (2 * nv);
        if (qq != 0) { u.x -= static_cast<i64>(qq) * v.x; u.y -= static_cast<i64>(qq) * v.y; }
        if (n2(u) >= nv) break;
        std::swap(u, v);
    }
    // Point P = s*u + t*v; det = +/- M.
    i128 det = static_cast<i128>(u.x) * v.y - static_cast<i128>(u.y) * v.x;
    i128 adet = det < 0 ? -det : det;
    i64 t_max = static_cast<i64>((static_cast<i128>(std::abs(u.x)) * B + static_cast<i128>(std::abs(u.y)) * A) / adet);
    i64 s_max = static_cast<i64>((static_cast<i128>(std::abs(v.x)) * B + static_cast<i128>(std::abs(v.y)) * A) / adet);

    for (i64 t = -t_max; t <= t_max; ++t) {
        i64 lo = -s_max, hi = s_max;
        bool empty = false;
        // 1 <= s*u.x + t*v.x <= A ; 1 <= s*u.y + t*v.y <= B
        const i64 comp_u[2] = {u.x, u.y};
        const i64 comp_v[2] = {v.x, v.y};
        const i64 cap[2] = {A, B};
        for (int i = 0; i < 2 && !empty; ++i) {
            i128 off = static_cast<i128>(t) * comp_v[i];
            i64 cu = comp_u[i];
            if (cu == 0) {
                if (off < 1 || off > cap[i]) empty = true;
                continue;
            }
            i128 lo_n = 1 - off, hi_n = cap[i] - off;
            if (cu < 0) { std::swap(lo_n, hi_n); cu = -cu; lo_n = -lo_n; hi_n = -hi_n; }
            i64 l = static_cast<i64>(lo_n >= 0 ? (lo_n + cu - 1) / cu : -((-lo_n) / cu));
            i64 h = static_cast<i64>(hi_n >= 0 ? hi_n / cu : -((-hi_n + cu - 1) / cu));
            lo = std::max(lo, l);
            hi = std::min(hi, h);
            if (lo > hi) empty = true;
        }
        if (empty) continue;
        for (i64 s = lo; s <= hi; ++s) {
            i64 ap = s * u.x + t * v.x;
            i64 bp = s * u.y + t * v.y;
            bool ok = true;
            for (const auto& [p, unused] : exact_primes) {
                (void)unused;
                if (ap % p == 0 || bp % p == 0) { ok = false; break; }
            }
            if (!ok) continue;
            visit(Sa * ap, Sb * bp);
        }
    }
}

} // namespace

void for_each_congruence_pair(i64 q, i64 r, i64 c,
                              const std::vector<std::pair<i64, int>>& factorization,
                              i64 Wa, i64 Wb, bool require_coprime_part,
                              const std::function<void(i64, i64)>& visit) {
    if (Wa <= 0 || Wb <= 0) return;
    if (c == 1) {
        for (i64 a = 1; a <= Wa; ++a)
            for (i64 b = 1; b <= Wb; ++b) visit(a, b);
        return;
    }
    const i128 mod = static_cast<i128>(c) * c;

    std::vector<std::vector<PrimeFamily>> per_prime;
    per_prime.reserve(factorization.size());
    for (const auto& [p, e] : factorization) {
        auto fams = prime_families(q, r, p, e);
        if (require_coprime_part) {
            std::erase_if(fams, [](const PrimeFamily& f) { return f.va >= 1 && f.vb >= 1; });
        }
        if (fams.empty()) return;
        per_prime.push_back(std::move(fams));
    }

    // Walk the cartesian product of per-prime families.
    const std::size_t n = per_prime.size();
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        i64 Sa = 1, Sb = 1, M = 1, R = 0;
        bool viable = true;
        std::vector<std::pair<i64, int>> exact_primes;
        for (std::size_t i = 0; i < n && viable; ++i) {
            const auto& [p, e] = factorization[i];
            const PrimeFamily& f = per_prime[i][pick[i]];
            i64 pa = pow_i64(p, f.va), pb = pow_i64(p, f.vb);
            if (pa > Wa || pb > Wb) { viable = false; break; }
            Sa *= pa;
            Sb *= pb;
            (void)e;
        }
        if (viable && (Sa > Wa || Sb > Wb)) viable = false;
        if (viable) {
            // CRT of the unit links a' = rho~ * b' (mod p^k).
            for (std::size_t i = 0; i < n && viable; ++i) {
                const auto& [p, e] = factorization[i];
                (void)e;
                const PrimeFamily& f = per_prime[i][pick[i]];
                if (f.link_mod == 1) continue;
                i64 pk = f.link_mod;
                i64 sa_unit = (Sa / pow_i64(p, f.va)) % pk;
                i64 sb_unit = (Sb / pow_i64(p, f.vb)) % pk;
                i64 rho = mul_mod(mul_mod(f.rho, sb_unit, pk), inv_mod(sa_unit, pk), pk);
                // Merge a' = R (mod M) ratios: both are ratios mod coprime moduli.
                i64 g = M;
                i64 inv_g = inv_mod(g % pk, pk);
                i64 add = mul_mod(((rho - R) % pk + pk) % pk, inv_g, pk);
                R = R + M * add;
                M = M * pk;
                if (f.exact) exact_primes.emplace_back(p, 1);
            }
        }
        if (viable) {
            // Exactness at primes without a link still applies when marked.
            enumerate_family(Sa, Sb, M, R, Wa, Wb, exact_primes, [&](i64 a, i64 b) {
                i128 val = (static_cast<i128>(q) * a % mod) * a + (static_cast<i128>(r) * b % mod) * b;
                if (val % mod == 0) visit(a, b);
            });
        }
        // Next combination.
        std::size_t i = 0;
        while (i < n && ++pick[i] == per_prime[i].size()) { pick[i] = 0; ++i; }
        if (i == n) break;
    }
}

} // namespace biform
