#include "biform/projective.hpp"

#include <cstdlib>
#include <numeric>

namespace biform {

ProjPoint normalize(const std::array<i64, 3>& raw) {
    i64 g = 0;
    for (i64 v : raw) g = std::gcd(g, std::abs(v));
    if (g == 0) throw contract_violation("normalize: all coordinates are zero");
    ProjPoint p;
    for (int i = 0; i < 3; ++i) p.coords[i] = raw[i] / g;
    for (int i = 0; i < 3; ++i) {
        if (p.coords[i] == 0) continue;
        if (p.coords[i] < 0) {
            for (int j = 0; j < 3; ++j) p.coords[j] = -p.coords[j];
        }
        break;
    }
    return p;
}

bool is_normalized(const ProjPoint& p) {
    i64 g = 0;
    for (i64 v : p.coords) g = std::gcd(g, std::abs(v));
    if (g != 1) return false;
    for (i64 v : p.coords) {
        if (v == 0) continue;
        return v > 0;
    }
    return false;
}

i64 height(const ProjPoint& p) {
    i64 h = 0;
    for (i64 v : p.coords) h = std::max(h, std::abs(v));
    return h;
}

BiPoint make_bipoint(const ProjPoint& x, const ProjPoint& y) {
    return BiPoint{x, y, height(x), height(y)};
}

i128 biheight(const BiPoint& p, const VarietyParams& params) {
    if (params.d != 1 && params.d != 2) throw contract_violation("biheight: d must be 1 or 2");
    bool ok = true;
    i128 h = mul_checked(p.hx, p.hx, ok);
    for (int k = 0; k < 3 - params.d; ++k) h = mul_checked(h, p.hy, ok);
    if (!ok) throw bound_too_large("biheight: overflow past 128 bits");
    return h;
}

bool on_open_variety(const BiPoint& p, const VarietyParams& params) {
    if (params.d != 1 && params.d != 2) throw contract_violation("on_open_variety: d must be 1 or 2");
    i128 sum = 0;
    for (int i = 0; i < 3; ++i) {
        if (p.x.coords[i] == 0 || p.y.coords[i] == 0) return false;
        i128 t = p.y.coords[i];
        if (params.d == 2) t *= p.y.coords[i];
        sum += static_cast<i128>(p.x.coords[i]) * t;
    }
    return sum == 0;
}

} // namespace biform
