#pragma once

#include <vector>

#include "nets/diffop.hpp"
#include "nets/quantum.hpp"

namespace nets {

// Known values the engine is pinned to reproduce. Everything here is
// regression data for the check and acceptance suites; the computations
// never read from this header.

/// The divisor multiplication matrix in the thirteen-class basis.
inline const QuantumMatrix& reference_quantum_matrix() {
    static const QuantumMatrix m = [] {
        QuantumMatrix r{};
        auto q = [](const Rational& c) { return Poly::monomial(c, 1); };
        auto q2 = [](const Rational& c) { return Poly::monomial(c, 2); };
        r[0][2] = q(Rational(3));
        r[0][11] = q2(Rational(2));
        r[1][0] = Poly(1);
        r[1][5] = q(Rational(8));
        r[1][6] = q(Rational(3));
        r[1][7] = q(Rational(2));
        r[1][12] = q2(Rational(2));
        r[2][1] = Poly(1);
        r[2][8] = q(Rational(21));
        r[2][9] = q(Rational(9));
        r[2][10] = q(Rational(6));
        r[3][9] = q(Rational(-1));
        r[4][8] = q(Rational(-33));
        r[4][9] = q(Rational(-12));
        r[4][10] = q(Rational(-9));
        r[5][2] = Poly(1);
        r[5][11] = q(Rational(2, 3));
        r[6][3] = Poly(1);
        r[7][4] = Poly(1);
        r[7][11] = q(Rational(-5, 3));
        r[8][5] = Poly(1);
        r[8][12] = q(Rational(1));
        r[9][6] = Poly(1);
        r[10][7] = Poly(1);
        r[10][12] = q(Rational(-3));
        r[11][8] = Poly(57);
        r[11][9] = Poly(27);
        r[11][10] = Poly(18);
        r[12][11] = Poly(1);
        return r;
    }();
    return m;
}

/// The order-twelve Picard-Fuchs operator of the net variety.
inline const DiffOp& reference_picard_fuchs_operator() {
    static const DiffOp op = [] {
        Poly D = Poly::x();
        auto C = [](long n) { return Poly(Rational(n)); };
        Poly D3 = D * D * D;
        Poly P0 =
            D3 * D3 * D * (C(299) * D * D - C(1035) * D + C(907)) * (D - C(1)) * (D - C(1)) * (D - C(1));
        Poly P1 = -D3 * (C(10166) * D3 * D3 + C(5474) * D3 * D * D - C(7135) * D3 * D - C(5855) * D3 +
                         C(1148) * D * D + C(2109) * D + C(513));
        Poly P2 = -(C(83122) * D3 * D3 + C(377246) * D3 * D * D + C(675645) * D3 * D + C(607063) * D3 +
                    C(289727) * D * D + C(70962) * D + C(7668));
        Poly P3 = C(-243) * (D + C(1)) * (C(299) * D * D + C(1357) * D + C(1551));
        return DiffOp(std::vector<Poly>{P0, P1, P2, P3});
    }();
    return op;
}

/// The order-four operator governing the hyperplane-section coefficients.
inline const DiffOp& reference_section_operator() {
    static const DiffOp op = [] {
        Poly D = Poly::x();
        auto R = [](long num, long den) { return Rational(num, den); };
        Poly D2 = D * D, D3 = D * D * D, D4 = D * D * D * D;
        Poly P0 = D4;
        Poly P1 = D4 * R(-700, 19) + D3 * R(-1238, 19) + D2 * R(-999, 19) + D * R(-20, 1) + Poly(R(-3, 1));
        Poly P2 = D4 * R(-64745, 361) + D3 * R(-368006, 361) + D2 * R(-609133, 361) + D * R(-21724, 19) +
                  Poly(R(-5382, 19));
        Poly P3 = D4 * R(172719, 361) + D3 * R(17334, 19) + D2 * R(-321921, 361) + D * R(-38880, 19) +
                  Poly(R(-16038, 19));
        Poly P4 = D4 * R(46656, 361) + D3 * R(841266, 361) + D2 * R(1767825, 361) + D * R(1347192, 361) +
                  Poly(R(354294, 361));
        Poly dp1 = D + Poly(1);
        Poly P5 = dp1 * dp1 * dp1 * dp1 * R(-177147, 361);
        return DiffOp(std::vector<Poly>{P0, P1, P2, P3, P4, P5});
    }();
    return op;
}

/// The first ten instanton numbers of the complete-intersection threefold.
inline const std::vector<long long>& reference_instanton_numbers() {
    static const std::vector<long long> n = {147,       756,        5283,        56970,        738477,
                                             10964412, 177916032, 3091158090, 56551583952, 1077954415692};
    return n;
}

/// The twelve two-point line invariants, keyed by basis index pairs.
inline const std::vector<std::tuple<int, int, long>>& reference_two_point_table() {
    static const std::vector<std::tuple<int, int, long>> t = {
        {2, 12, 3},  {3, 12, 0},  {4, 12, 0},  {5, 11, 8},  {6, 11, 3},   {7, 11, 2},
        {8, 8, 603}, {8, 9, 270}, {8, 10, 180}, {9, 9, 121}, {9, 10, 81}, {10, 10, 54}};
    return t;
}

}  // namespace nets
