#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "biform/int128.hpp"

namespace biform {

// Modular helpers shared by the counting pipelines.
i64 inv_mod(i64 a, i64 m);            // inverse of a mod m, gcd(a, m) = 1
u64 pow_mod(u64 base, u64 exp, u64 mod);

// Square roots of D modulo p^k for an odd prime p with p not dividing D.
// Returns the full root set (empty or {r, p^k - r}).
std::vector<i64> sqrt_mod_odd_prime_power(i64 D, i64 p, int k);

// Square roots of odd D modulo 2^k (k >= 1). Empty when insoluble.
std::vector<i64> sqrt_mod_two_power(i64 D, int k);

// Enumerates all (a, b) in [1, Wa] x [1, Wb] with q*a^2 + r*b^2 = 0 mod c^2,
// where factorization holds the prime factorization of c. Solutions are
// produced as a disjoint union of scaled root families, each swept by a
// reduced-basis walk of its plane lattice, so the cost is proportional to
// the number of families plus the number of hits rather than to the box.
//
// When require_coprime_part is set, families all of whose members share a
// prime factor with c in both coordinates are skipped (their points can
// never satisfy gcd(a, b, c) = 1).
void for_each_congruence_pair(i64 q, i64 r, i64 c,
                              const std::vector<std::pair<i64, int>>& factorization,
                              i64 Wa, i64 Wb, bool require_coprime_part,
                              const std::function<void(i64, i64)>& visit);

} // namespace biform
