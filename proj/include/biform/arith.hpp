#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "biform/errors.hpp"
#include "biform/int128.hpp"

namespace biform {

// Smallest-prime-factor table for 2..limit. Immutable once built; safe to
// share across threads.
class FactorSieve {
public:
    static constexpr i64 kDefaultLimit = 10'000'000;

    explicit FactorSieve(i64 limit = kDefaultLimit);

    i64 limit() const { return limit_; }

    // Least prime factor of n, 2 <= n <= limit.
    i64 spf(i64 n) const;

    // (prime, exponent) pairs in increasing prime order, n >= 1.
    std::vector<std::pair<i64, int>> factor(i64 n) const;

    // Rebuild with a larger limit if needed.
    void grow(i64 new_limit);

private:
    i64 limit_;
    std::vector<std::uint32_t> spf_;
    void build();
};

// gcd of the absolute values; 0 only if every input is 0. Empty input is a
// contract violation.
i64 gcd_many(const std::vector<i64>& values);

// Moebius function. 0 iff n has a squared prime factor.
int mobius(i64 n, const FactorSieve& sieve);

// (omega, tau) = (# distinct prime factors, # divisors).
std::pair<int, i64> divisor_stats(i64 n, const FactorSieve& sieve);

// u = z^2 * ell with z > 0 and ell squarefree carrying the sign of u.
struct SquarefreeParts {
    i64 z;
    i64 ell;
};
SquarefreeParts squarefree_decompose(i64 u, const FactorSieve& sieve);

// Jacobi symbol (a | n) for odd positive n.
int jacobi(i64 a, i64 n);

} // namespace biform
