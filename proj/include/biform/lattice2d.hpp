#pragma once

#include <array>
#include <functional>

#include "biform/int128.hpp"

namespace biform {

// Rank-2 sublattice of Z^3 given by an ordered basis.
struct PlaneLattice {
    std::array<i64, 3> b1{0, 0, 0};
    std::array<i64, 3> b2{0, 0, 0};
};

// Basis of the saturated kernel lattice {u in Z^3 : u . w = 0} for a
// primitive w. The returned basis is Gauss-reduced and spans the full kernel
// (its cross product is +/- w).
PlaneLattice kernel_lattice(const std::array<i64, 3>& w);

// Shorten (b1, b2) under the Euclidean norm; keeps the lattice unchanged.
void gauss_reduce(PlaneLattice& L);

// Visit every nonzero lattice point u = alpha*b1 + beta*b2 with
// |u_i| <= bounds_i. Bounds must be >= 0. The visitor also receives the
// coefficient pair; gcd(|alpha|,|beta|) = 1 is equivalent to u being a
// primitive vector of Z^3 when the lattice is saturated.
void for_each_in_box(const PlaneLattice& L, const std::array<i64, 3>& bounds,
                     const std::function<void(const std::array<i64, 3>&, i64, i64)>& visit);

inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

} // namespace biform
