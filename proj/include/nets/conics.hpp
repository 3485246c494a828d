#pragma once

#include <array>

#include "nets/counts.hpp"

namespace nets {

/// Virtual numbers of balanced-type conics on the three Calabi-Yau
/// sections: residue sums over the conic fixpoint list, with the order-two
/// automorphism factor on double covers.
inline std::array<Rational, 3> conic11_counts(const WeightVector& w) {
    const auto& records = conic_records();
    IntegrandSpec on_x{9, [](const LocalWeights& lw) {
                           Rational c3 = lw.chern("Op", 3);
                           return c3 * c3 * c3;
                       }};
    IntegrandSpec on_y{9, [](const LocalWeights& lw) { return lw.chern("Fv", 4) * lw.chern("O2p", 5); }};
    IntegrandSpec on_z{9, [](const LocalWeights& lw) { return lw.chern("S2Fv", 9); }};
    return {bott_integral(records, on_x, w), bott_integral(records, on_y, w),
            bott_integral(records, on_z, w)};
}

struct ConicTotals {
    std::array<Rational, 3> balanced;   // the (1,1) part
    std::array<Rational, 3> planar;     // the (0,2) part
    std::array<Rational, 3> totals;
};

inline ConicTotals conic_totals(const WeightVector& w) {
    ConicTotals t;
    t.balanced = conic11_counts(w);
    t.planar = conic02_counts();
    for (size_t i = 0; i < 3; ++i) t.totals[i] = t.balanced[i] + t.planar[i];
    return t;
}

}  // namespace nets
