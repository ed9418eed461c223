#include "biform/asymfit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "biform/errors.hpp"

namespace biform {

double zeta2_inv_sq() {
    const double pi = 3.14159265358979323846;
    return 36.0 / (pi * pi * pi * pi);
}

GrowthReport fit_constant(const std::vector<CountRecord>& records) {
    GrowthReport report;
    report.lower_const = zeta2_inv_sq();
    std::set<i64> seen;
    for (const auto& r : records) {
        if (r.B < 3) continue;
        if (!seen.insert(r.B).second) continue;
        double ratio = static_cast<double>(r.count) / (static_cast<double>(r.B) * std::log(static_cast<double>(r.B)));
        report.rows.push_back(GrowthRow{r.B, r.count, ratio});
    }
    if (report.rows.size() < 3) {
        throw insufficient_data("fit_constant: need at least 3 records with distinct B >= 3");
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const GrowthRow& a, const GrowthRow& b) { return a.B < b.B; });
    double sum = 0.0;
    for (const auto& row : report.rows) sum += row.ratio;
    report.fitted_c = sum / static_cast<double>(report.rows.size());
    report.stability = 0.0;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        double prev = report.rows[i - 1].ratio;
        if (prev <= 0.0) continue;
        report.stability = std::max(report.stability, std::abs(report.rows[i].ratio - prev) / prev);
    }
    return report;
}

} // namespace biform
