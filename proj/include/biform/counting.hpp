#pragma once

#include <array>
#include <functional>
#include <string>

#include "biform/arith.hpp"
#include "biform/projective.hpp"

namespace biform {

// One counting experiment: N(B) for one method.
struct CountRecord {
    i64 B = 0;
    std::string method;
    i64 count = 0;
    double elapsed = 0.0;
    int shards = 1;
};

enum class CountMethod { brute, fiber, param };

const char* method_name(CountMethod m);
CountMethod method_from_name(const std::string& name);

// Enumeration guards: full enumeration is quadratic-ish in B, the fiber
// engine needs to factor values up to B.
constexpr i64 kBruteBoundGuard = 1'000'000;
constexpr i64 kFiberBoundGuard = 100'000'000;

// N(B) by direct enumeration, split by which factor of the pair is larger so
// neither nested loop exceeds the box of the smaller side.
CountRecord count_brute(i64 B, const VarietyParams& params = {}, int shards = 1);

// Number of normalized x with all x_i != 0, gcd = 1, sum x_i y_i^2 = 0 and
// max |x_i| <= Xmax, for a normalized y with nonzero coordinates. Iterates
// one free coordinate and walks the congruence class modulo the square of
// the largest y-coordinate; falls back to a kernel-lattice sweep when no
// coordinate pair is coprime.
i64 count_fiber(const ProjPoint& y, i64 Xmax);

// Linear-variety analogue (d = 1 cross-check channel): normalized x with
// nonzero coordinates, x . y = 0, max |x_i| <= Xmax.
i64 count_fiber_linear(const ProjPoint& y, i64 Xmax);

// N(B) via the chosen pipeline. All three agree exactly; shards only
// partition the work.
CountRecord count_total(i64 B, CountMethod method, int shards, const FactorSieve& sieve);

// Exact S_k slice: x' in (Z\{0})^3 with x0' y0^2 + x1' y1^2 + x2' y2^2 = 0
// and max_{i in {0,1}} x_i'^2 y2 <= B / (4 k^2). Requires gcd(y0, y2) = 1.
i64 sk_exact(const std::array<i64, 3>& y, i64 B, i64 k);

// Main term of the S_k slice: B / (k^2 y2^3).
double sk_mainterm(const std::array<i64, 3>& y, i64 B, i64 k);

// Lower-bound count restricted to ordered small fibers: 12 times the number
// of pairs with 0 < y0 < y1 < y2 <= B^(1/6), gcd(y0, y2) = 1 and
// max_{i in {0,1}} x_i^2 y2 <= B/4 (x nonzero, primitive, on the equation).
i64 restricted_lower_count(i64 B);

// Visit every point of the open variety with biheight <= B, each exactly
// once as a normalized pair.
using PointVisitor = std::function<void(const ProjPoint& x, const ProjPoint& y)>;
void enumerate_points(i64 B, const VarietyParams& params, const PointVisitor& visit);

// Fiber pipeline with an explicit crossover between the small-height sweep
// and the congruence-family sweep. The result must not depend on the cut;
// count_total uses cut = cbrt(B). Exposed so tests can vary the boundary.
i64 fiber_point_count(i64 B, int shards, const FactorSieve& sieve, i64 cut);

} // namespace biform
