#pragma once

#include <array>

#include "biform/errors.hpp"
#include "biform/int128.hpp"

namespace biform {

// A point of P^2(Q) as its unique primitive integer representative with the
// first nonzero coordinate positive.
struct ProjPoint {
    std::array<i64, 3> coords{0, 0, 0};

    bool operator==(const ProjPoint&) const = default;
};

// The hypersurface x0*y0^d + x1*y1^d + x2*y2^d = 0 in P^2 x P^2. Only the
// quadratic case d = 2 and the linear cross-check case d = 1 are supported.
struct VarietyParams {
    int n = 2;
    int d = 2;
};

// Divide by the gcd, then flip signs so the first nonzero coordinate is
// positive. All-zero input is invalid.
ProjPoint normalize(const std::array<i64, 3>& raw);

bool is_normalized(const ProjPoint& p);

// max |coordinate|.
i64 height(const ProjPoint& p);

// A pair of points with cached heights.
struct BiPoint {
    ProjPoint x;
    ProjPoint y;
    i64 hx = 0;
    i64 hy = 0;

    bool operator==(const BiPoint&) const = default;
};

BiPoint make_bipoint(const ProjPoint& x, const ProjPoint& y);

// Anticanonical height H(x)^n * H(y)^(n+1-d). Overflow past 128 bits throws
// bound_too_large.
i128 biheight(const BiPoint& p, const VarietyParams& params = {});

// True iff sum x_i y_i^d = 0 and all six coordinates are nonzero.
bool on_open_variety(const BiPoint& p, const VarietyParams& params = {});

} // namespace biform
