#include "biform/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace biform {

FactorSieve::FactorSieve(i64 limit) : limit_(limit) {
    if (limit_ < 2) limit_ = 2;
    build();
}

void FactorSieve::build() {
    spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
    for (i64 p = 2; p <= limit_; ++p) {
        if (spf_[p] != 0) continue;
        for (i64 m = p; m <= limit_; m += p) {
            if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(p);
        }
    }
}

void FactorSieve::grow(i64 new_limit) {
    if (new_limit <= limit_) return;
    limit_ = new_limit;
    build();
}

i64 FactorSieve::spf(i64 n) const {
    if (n < 2) throw contract_violation("spf: argument must be >= 2");
    if (n > limit_) throw sieve_too_small("spf: " + std::to_string(n) + " exceeds sieve limit " + std::to_string(limit_));
    return spf_[n];
}

std::vector<std::pair<i64, int>> FactorSieve::factor(i64 n) const {
    if (n < 1) throw contract_violation("factor: argument must be >= 1");
    if (n > limit_) throw sieve_too_small("factor: " + std::to_string(n) + " exceeds sieve limit " + std::to_string(limit_));
    std::vector<std::pair<i64, int>> out;
    while (n > 1) {
        i64 p = spf_[n];
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    return out;
}

i64 gcd_many(const std::vector<i64>& values) {
    if (values.empty()) throw contract_violation("gcd_many: empty input");
    i64 g = 0;
    for (i64 v : values) g = std::gcd(g, std::abs(v));
    return g;
}

int mobius(i64 n, const FactorSieve& sieve) {
    if (n < 1) throw contract_violation("mobius: argument must be >= 1");
    int m = 1;
    for (const auto& [p, e] : sieve.factor(n)) {
        (void)p;
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

std::pair<int, i64> divisor_stats(i64 n, const FactorSieve& sieve) {
    if (n < 1) throw contract_violation("divisor_stats: argument must be >= 1");
    int omega = 0;
    i64 tau = 1;
    for (const auto& [p, e] : sieve.factor(n)) {
        (void)p;
        ++omega;
        tau *= e + 1;
    }
    return {omega, tau};
}

SquarefreeParts squarefree_decompose(i64 u, const FactorSieve& sieve) {
    if (u == 0) throw contract_violation("squarefree_decompose: argument must be nonzero");
    i64 z = 1, ell = u < 0 ? -1 : 1;
    for (const auto& [p, e] : sieve.factor(std::abs(u))) {
        for (int i = 0; i < e / 2; ++i) z *= p;
        if (e % 2) ell *= p;
    }
    return {z, ell};
}

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw contract_violation("jacobi: modulus must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

} // namespace biform
