#pragma once

#include <array>
#include <optional>

#include "biform/arith.hpp"

namespace biform {

// A diagonal ternary quadratic a*v0^2 + b*v1^2 + c*v2^2 reduced so the
// coefficients are squarefree, pairwise coprime and nonzero. square_scales
// maps a solution V of the reduced form back to a solution of the original:
// v_i = square_scales[i] * V_i (up to an overall gcd).
struct ReducedForm {
    std::array<i64, 3> coeffs{0, 0, 0};
    std::array<i64, 3> square_scales{1, 1, 1};

    bool definite() const {
        return (coeffs[0] > 0) == (coeffs[1] > 0) && (coeffs[1] > 0) == (coeffs[2] > 0);
    }
};

// Solubility-preserving reduction of an arbitrary nonzero coefficient triple.
ReducedForm reduce(const std::array<i64, 3>& raw, const FactorSieve& sieve);

// True iff u0*v0^2 + u1*v1^2 + u2*v2^2 = 0 has a solution with all
// coordinates nonzero and pairwise coprime. Decided by Legendre's criterion
// on the reduced form; a soluble smooth conic has only finitely many points
// on coordinate lines, so this matches nontrivial solubility.
bool is_soluble(const std::array<i64, 3>& u, const FactorSieve& sieve);

// A witness for is_soluble: nonzero, pairwise coprime, satisfying the
// equation exactly. Empty iff insoluble. Criterion/search disagreement
// throws oracle_bug.
std::optional<std::array<i64, 3>> find_solution(const std::array<i64, 3>& u, const FactorSieve& sieve);

} // namespace biform
