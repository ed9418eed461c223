#pragma once

#include <array>
#include <functional>
#include <utility>

#include "biform/int128.hpp"

namespace biform {

// The 15-integer parametrization of a point pair: f, g, h positive, u, v
// nonzero, with f0 u0 v0^2 + f1 u1 v1^2 + f2 u2 v2^2 = 0 and the coprimality
// battery gcd(f_i, f_j g_j h_i u_i v_j) = gcd(g_i, g_j h_i u_i v_i v_j) =
// gcd(h_i, h_j v_i) = gcd(u_i, u_j) = gcd(v_i, v_j) = 1 for i != j.
struct ParamTuple {
    std::array<i64, 3> f{1, 1, 1};
    std::array<i64, 3> g{1, 1, 1};
    std::array<i64, 3> h{1, 1, 1};
    std::array<i64, 3> u{0, 0, 0};
    std::array<i64, 3> v{0, 0, 0};

    bool operator==(const ParamTuple&) const = default;
};

// Unique decomposition of a primitive pair with nonzero coordinates on the
// equation x0 y0^2 + x1 y1^2 + x2 y2^2 = 0:
//   h_i = gcd(y_j, y_k),  y_i = h_j h_k y_i',  x_i = h_i^2 x_i',
//   X_i = gcd(x_j', x_k'), x_i' = X_j X_k u_i,
//   X_i = f_i g_i^2 and y_i' = f_i g_i v_i with gcd(g_i, v_i) = 1, via
//   g_i = X_i / gcd(X_i, y_i').
// Any failed division step signals a precondition violation.
ParamTuple decompose(const std::array<i64, 3>& x, const std::array<i64, 3>& y);

// Inverse map: x_i = h_i^2 f_j g_j^2 f_k g_k^2 u_i, y_i = h_j h_k f_i g_i v_i.
std::pair<std::array<i64, 3>, std::array<i64, 3>> recompose(const ParamTuple& t);

// Checks every tuple invariant (positivity, the equation, the coprimality
// battery).
bool validate(const ParamTuple& t);

// Anticanonical height of the represented pair, straight from the tuple:
// (max_i f_j f_k g_j^2 g_k^2 h_i^2 |u_i|)^2 * (max_i f_i g_i h_j h_k |v_i|).
i128 tuple_height(const ParamTuple& t);

constexpr i64 kTupleBoundGuard = 2'000'000;

// Number of tuples with tuple_height <= B, enumerated directly over the
// 15 variables (never by mapping points). Equals 4 N(B) exactly.
i64 count_tuples(i64 B, int shards = 1);

// Visit every such tuple once.
void enumerate_tuples(i64 B, const std::function<void(const ParamTuple&)>& visit);

} // namespace biform
