#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "biform/arith.hpp"
#include "biform/int128.hpp"

namespace biform {

// Real box bounds; integer vectors are constrained by |x_i| <= floor(U_i).
struct Box3 {
    std::array<double, 3> bounds{1.0, 1.0, 1.0};
};

// One observed-versus-envelope evaluation.
struct EnvelopeReport {
    i64 observed = 0;
    double envelope = 0.0;
    double ratio = 0.0;
    std::string inputs;
};

// Primitive vectors u with |u_i| <= U_i and u . w = 0, for primitive w.
// Enumerated through the rank-2 kernel lattice.
i64 count_linear_box(const std::array<i64, 3>& w, const Box3& box);

// Hard bound for count_linear_box: 12*pi*U0*U1*U2 / max|w_i|U_i + 4.
double linear_box_bound(const std::array<i64, 3>& w, const Box3& box);

// Primitive vectors v with |v_i| <= V_i and u0 v0^2 + u1 v1^2 + u2 v2^2 = 0,
// for nonzero pairwise-coprime u.
i64 count_quadratic_box(const std::array<i64, 3>& u, const Box3& box);

// Envelope for count_quadratic_box up to an implied constant:
// (V0 V1 V2 / |u0 u1 u2| + 1)^(1/3) * tau(|u0 u1 u2|).
double quadratic_box_envelope(const std::array<i64, 3>& u, const Box3& box, i64 tau_of_product);

// M_eps factor: 1 + max over index splits of (U_i U_j)^(-1/2+eps) log(2 U_k).
double m_eps(const Box3& box, double eps);

// Sum of 2^omega(|u0 u1 u2|) over nonzero pairwise-coprime u in the box for
// which f0 u0 v0^2 + f1 u1 v1^2 + f2 u2 v2^2 = 0 is soluble in nonzero
// pairwise-coprime v. Membership is decided by the supplied oracle.
using SolubleOracle = std::function<bool(const std::array<i64, 3>&)>;
i64 solvable_weight_sum(const std::array<i64, 3>& f, const Box3& box,
                        const FactorSieve& sieve, const SolubleOracle& oracle);

// Pairs (u, v) of nonzero triples with |u_i| <= U_i, |v_i| <= V_i,
// f0 u0 v0^2 + f1 u1 v1^2 + f2 u2 v2^2 = 0 and gcd(u_i v_i, u_j v_j) = 1.
i64 count_mixed_box(const std::array<i64, 3>& f, const Box3& ubox, const Box3& vbox);

// Envelope for count_mixed_box up to an implied constant:
// |f0 f1 f2|^eps (U0 U1 U2)^(2/3) (V0 V1 V2)^(1/3) M_eps(U).
double mixed_box_envelope(const std::array<i64, 3>& f, const Box3& ubox, const Box3& vbox, double eps);

// All boxes with every bound in {1, 2, 4, ..., 2^maxpow}.
std::vector<Box3> dyadic_grid(int maxpow);

} // namespace biform
