#pragma once

#include <array>
#include <nets/linalg.hpp>
#include <nets/rational.hpp>
#include <vector>

// Independent oracles used by the test and acceptance suites. These take
// their own computational routes and never touch the fixpoint datasets or
// series pipeline they are checking.

namespace nets::oracles {

/// Number of lines on a quintic threefold by a residue sum over the ten
/// coordinate fixpoints of the space of lines in four-space: the top Chern
/// class of the fifth symmetric power of the dual tautological bundle.
inline Rational quintic_lines_grassmannian() {
    const std::array<long, 5> w = {0, 1, 3, 9, 27};
    Rational total(0);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            Rational num(1);
            for (int a = 0; a <= 5; ++a) num *= Rational(-(a * w[i] + (5 - a) * w[j]));
            Rational den(1);
            for (int k = 0; k < 5; ++k) {
                if (k == i || k == j) continue;
                den *= Rational(w[k] - w[i]);
                den *= Rational(w[k] - w[j]);
            }
            total += num / den;
        }
    return total;
}

/// Dimension of the space of conics through five general points in the
/// plane: six coefficients minus the rank of the five point conditions.
inline long conics_through_five_points() {
    Matrix rows;
    for (long t = 1; t <= 5; ++t) {
        Rational x(1), y(t), z(t * t);
        rows.push_back({x * x, y * y, z * z, x * y, x * z, y * z});
    }
    return 6 - static_cast<long>(matrix_rank(rows));
}

}  // namespace nets::oracles
