#pragma once

#include <vector>

#include "biform/counting.hpp"

namespace biform {

struct GrowthRow {
    i64 B = 0;
    i64 N = 0;
    double ratio = 0.0;  // N / (B ln B)
};

struct GrowthReport {
    std::vector<GrowthRow> rows;      // sorted by B
    double fitted_c = 0.0;            // least squares over the ratios
    double lower_const = 0.0;         // 36 / pi^4
    double stability = 0.0;           // max relative change between consecutive ratios

    bool stable(double threshold = 0.25) const { return stability < threshold; }
};

// 1 / zeta(2)^2 = 36 / pi^4.
double zeta2_inv_sq();

// Fit c in N = c * B ln B by least squares in ratio space (natural log).
// Needs at least three records with distinct B >= 3.
GrowthReport fit_constant(const std::vector<CountRecord>& records);

} // namespace biform
