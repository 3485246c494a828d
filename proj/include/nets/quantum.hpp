#pragma once

#include <array>
#include <map>
#include <vector>

#include "nets/counts.hpp"
#include "nets/diffop.hpp"
#include "nets/qseries.hpp"
#include "nets/ratfun.hpp"

namespace nets {

// ---------------------------------------------------------------------------
// Two-point invariants of the net variety in degree one, by localization
// over the two-marked moduli of lines.
// ---------------------------------------------------------------------------

struct TwoPointData {
    // the degree-one pairings with complementary codimension, keyed (a, b), a <= b
    std::map<std::pair<int, int>, Rational> line_pairings;
    // cotangent-line descendant seeds for the hypergeometric recursions
    Rational a1, b1, c1;
    WeightVector weights;
};

inline const std::vector<std::pair<int, int>>& two_point_index_pairs() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> v;
        const NetChowRing& R = net_chow_ring();
        for (int a = 0; a < NetChowRing::dim; ++a)
            for (int b = a; b < NetChowRing::dim; ++b)
                if (R.basis_degree(a) + R.basis_degree(b) == 8) v.emplace_back(a, b);
        return v;
    }();
    return pairs;
}

inline TwoPointData two_point_numbers(const WeightVector& w) {
    TwoPointData out;
    out.weights = w;
    const auto& records = marked_line_records();
    for (auto [a, b] : two_point_index_pairs()) {
        IntegrandSpec spec{8, [a, b](const LocalWeights& lw) {
                               return basis_class_value(a, lw, "E1v", "F1") *
                                      basis_class_value(b, lw, "E2v", "F2");
                           }};
        out.line_pairings[{a, b}] = bott_integral(records, spec, w);
    }
    IntegrandSpec sa{8, [](const LocalWeights& lw) {
                         return lw.psi().pow(2) * basis_class_value(12, lw, "E1v", "F1");
                     }};
    IntegrandSpec sb{8, [](const LocalWeights& lw) {
                         return lw.psi().pow(3) * basis_class_value(11, lw, "E1v", "F1");
                     }};
    IntegrandSpec sc{8, [](const LocalWeights& lw) {
                         return lw.psi().pow(4) * basis_class_value(8, lw, "E1v", "F1") * Rational(1, 57);
                     }};
    out.a1 = bott_integral(records, sa, w);
    out.b1 = bott_integral(records, sb, w);
    out.c1 = bott_integral(records, sc, w);
    return out;
}

// ---------------------------------------------------------------------------
// The divisor quantum multiplication matrix.
// ---------------------------------------------------------------------------

/// 13x13 matrix of polynomials in q: column a holds the coordinates of the
/// quantum product of the ample divisor with the a-th basis class.
using QuantumMatrix = std::array<std::array<Poly, NetChowRing::dim>, NetChowRing::dim>;

/// Coordinates of the Poincare dual of a basis class.
inline std::vector<Rational> dual_basis_coords(int b) {
    const NetChowRing& R = net_chow_ring();
    int deg = R.basis_degree(b);
    std::vector<int> mine = R.basis_of_degree(6 - deg);
    std::vector<int> comp = R.basis_of_degree(deg);
    Matrix g(comp.size(), std::vector<Rational>(mine.size()));
    for (size_t r = 0; r < comp.size(); ++r)
        for (size_t c = 0; c < mine.size(); ++c) g[r][c] = R.pairing(mine[c], comp[r]);
    std::vector<Rational> rhs(comp.size());
    for (size_t r = 0; r < comp.size(); ++r) rhs[r] = comp[r] == b ? Rational(1) : Rational(0);
    std::vector<Rational> sol = solve_linear(g, rhs);
    std::vector<Rational> coords(NetChowRing::dim);
    for (size_t c = 0; c < mine.size(); ++c) coords[static_cast<size_t>(mine[c])] = sol[c];
    return coords;
}

/// Two-point invariant in degree two: the single pairing allowed by the
/// dimension count, taken as input and guarded downstream by the
/// independent conic count.
inline const Rational& degree_two_pairing_input() {
    static const Rational value(1);
    return value;
}

inline QuantumMatrix quantum_matrix(const TwoPointData& tp) {
    const NetChowRing& R = verified_net_chow_ring(tp.weights);
    QuantumMatrix m;
    auto pairing_value = [&tp](int a, int b) {
        auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = tp.line_pairings.find(key);
        return it == tp.line_pairings.end() ? Rational(0) : it->second;
    };
    for (int a = 0; a < NetChowRing::dim; ++a) {
        // classical part: cup product with the ample divisor class
        const std::vector<Rational>& cup = R.basis_product(1, a);
        for (int c = 0; c < NetChowRing::dim; ++c)
            if (!cup[static_cast<size_t>(c)].is_zero())
                m[static_cast<size_t>(c)][static_cast<size_t>(a)] += Poly(cup[static_cast<size_t>(c)]);
        // degree-one corrections
        for (int b = 0; b < NetChowRing::dim; ++b) {
            if (R.basis_degree(a) + R.basis_degree(b) != 8) continue;
            Rational v = pairing_value(a, b);
            if (v.is_zero()) continue;
            std::vector<Rational> dual = dual_basis_coords(b);
            for (int c = 0; c < NetChowRing::dim; ++c)
                if (!dual[static_cast<size_t>(c)].is_zero())
                    m[static_cast<size_t>(c)][static_cast<size_t>(a)] +=
                        Poly::monomial(v * dual[static_cast<size_t>(c)], 1);
        }
        // degree-two correction: only the top pairing survives the dimension count
        for (int b = 0; b < NetChowRing::dim; ++b) {
            if (R.basis_degree(a) + R.basis_degree(b) != 11) continue;
            if (!((a == 11 && b == 12) || (a == 12 && b == 11))) continue;
            Rational v = Rational(2) * degree_two_pairing_input();
            std::vector<Rational> dual = dual_basis_coords(b);
            for (int c = 0; c < NetChowRing::dim; ++c)
                if (!dual[static_cast<size_t>(c)].is_zero())
                    m[static_cast<size_t>(c)][static_cast<size_t>(a)] +=
                        Poly::monomial(v * dual[static_cast<size_t>(c)], 2);
        }
    }
    return m;
}

/// Applies the matrix (with polynomial entries) to a coordinate vector of
/// polynomials in q.
inline std::vector<Poly> apply_matrix(const QuantumMatrix& m, const std::vector<Poly>& v) {
    std::vector<Poly> r(NetChowRing::dim);
    for (int i = 0; i < NetChowRing::dim; ++i)
        for (int j = 0; j < NetChowRing::dim; ++j)
            if (!m[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero() &&
                !v[static_cast<size_t>(j)].is_zero())
                r[static_cast<size_t>(i)] +=
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
    return r;
}

// ---------------------------------------------------------------------------
// Cyclic-vector elimination: operators annihilating the top coordinate of
// every flat section of the divisor connection.
// ---------------------------------------------------------------------------

/// Rows of the cyclic derivative tower: row k applied to a solution vector
/// gives D^k of its top coordinate. All entries are polynomials in q.
inline std::vector<std::vector<Poly>> cyclic_rows(const QuantumMatrix& m, int count) {
    std::vector<std::vector<Poly>> rows;
    std::vector<Poly> v(NetChowRing::dim);
    v[NetChowRing::dim - 1] = Poly(Rational(1));
    rows.push_back(v);
    Poly x = Poly::x();
    for (int k = 1; k < count; ++k) {
        const std::vector<Poly>& prev = rows.back();
        std::vector<Poly> next(NetChowRing::dim);
        for (int j = 0; j < NetChowRing::dim; ++j) {
            next[static_cast<size_t>(j)] = x * prev[static_cast<size_t>(j)].derivative();
            for (int i = 0; i < NetChowRing::dim; ++i) {
                const Poly& mij = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (mij.is_zero() || prev[static_cast<size_t>(i)].is_zero()) continue;
                next[static_cast<size_t>(j)] += prev[static_cast<size_t>(i)] * mij;
            }
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

/// First linear dependence in the cyclic tower over the rational function
/// field, as an operator. This is the minimal-order annihilator; for the
/// net variety it already appears at order ten, with coefficient q-degrees
/// well above the grading bound.
inline std::pair<size_t, DiffOp> cyclic_first_dependence(const QuantumMatrix& m, int max_order = 13) {
    auto polys = cyclic_rows(m, max_order + 1);
    std::vector<std::vector<RatFun>> rows;
    rows.reserve(polys.size());
    for (const auto& r : polys) {
        std::vector<RatFun> rr;
        rr.reserve(r.size());
        for (const Poly& p : r) rr.emplace_back(p);
        rows.push_back(std::move(rr));
    }
    auto dep = ratfun_nullspace(rows);
    if (!dep) throw std::logic_error("cyclic_first_dependence: no dependence up to the requested order");
    const auto& [order, coeffs] = *dep;
    int qdeg = 0;
    for (const Poly& c : coeffs) qdeg = std::max(qdeg, c.degree());
    std::vector<Poly> blocks(static_cast<size_t>(qdeg) + 1);
    for (size_t k = 0; k < coeffs.size(); ++k)
        for (int a = 0; a <= coeffs[k].degree(); ++a)
            blocks[static_cast<size_t>(a)] += Poly::monomial(coeffs[k].coeff(a), static_cast<int>(k));
    return {order, DiffOp(std::move(blocks))};
}

/// The Picard-Fuchs operator: the lowest-order annihilator of the cyclic
/// functional all of whose monomials q^a D^k obey the weight bound
/// 3a + k <= order, with weight three for q from the index of the variety.
/// Solved by exact linear algebra on the cyclic rows; the result is
/// normalized to coprime integer coefficients with a positive leading
/// block. The kernel is required to be one-dimensional at the first order
/// where it is nonzero.
inline DiffOp picard_fuchs(const QuantumMatrix& m, int max_order = 13) {
    auto rows = cyclic_rows(m, max_order + 1);
    for (int N = 1; N <= max_order; ++N) {
        std::vector<std::pair<int, int>> unknowns;  // (k, a) for q^a D^k
        for (int k = 0; k <= N; ++k)
            for (int a = 0; 3 * a + k <= N; ++a) unknowns.emplace_back(k, a);
        int maxdeg = 0;
        for (int k = 0; k <= N; ++k)
            for (const Poly& p : rows[static_cast<size_t>(k)]) maxdeg = std::max(maxdeg, p.degree());
        maxdeg += N / 3 + 1;
        Matrix system;
        for (int j = 0; j < NetChowRing::dim; ++j)
            for (int t = 0; t <= maxdeg; ++t) {
                std::vector<Rational> eq(unknowns.size());
                bool nonzero = false;
                for (size_t u = 0; u < unknowns.size(); ++u) {
                    auto [k, a] = unknowns[u];
                    eq[u] = rows[static_cast<size_t>(k)][static_cast<size_t>(j)].coeff(t - a);
                    if (!eq[u].is_zero()) nonzero = true;
                }
                if (nonzero) system.push_back(std::move(eq));
            }
        auto ker = kernel_basis(system);
        if (ker.empty()) continue;
        if (ker.size() > 1)
            throw std::logic_error("picard_fuchs: annihilator ansatz is not unique at order " +
                                   std::to_string(N));
        std::vector<Poly> blocks(static_cast<size_t>(N / 3) + 1);
        for (size_t u = 0; u < unknowns.size(); ++u) {
            auto [k, a] = unknowns[u];
            blocks[static_cast<size_t>(a)] += Poly::monomial(ker[0][u], k);
        }
        // content and sign normalization
        Rational content(0);
        for (const Poly& b : blocks) {
            if (b.is_zero()) continue;
            Rational pc = b.content();
            content = content.is_zero()
                          ? pc
                          : Rational(gcd(content.num() * pc.den(), pc.num() * content.den()),
                                     content.den() * pc.den());
        }
        if (blocks[0].leading().sign() < 0) content = -content;
        Rational inv = Rational(1) / content;
        for (Poly& b : blocks) b = b * inv;
        return DiffOp(std::move(blocks));
    }
    throw std::logic_error("picard_fuchs: no weight-bounded annihilator up to the requested order");
}

// ---------------------------------------------------------------------------
// Hypergeometric solutions with logarithmic structure.
// ---------------------------------------------------------------------------

struct RecursionSeeds {
    Rational a0, a1, b0, b1, c0, c1;
};

/// Solves the three coefficient recursions attached to the operator.
/// The free indices are the integer roots 0 and 1 of the leading block;
/// operators whose leading block vanishes at an integer above 1 are
/// rejected.
inline LogSolutionTriple solve_log_solutions(const DiffOp& op, const RecursionSeeds& seeds, int order) {
    const Poly& P0 = op.block(0);
    for (int n = 2; n <= order; ++n)
        if (P0.eval(Rational(n)).is_zero())
            throw std::domain_error("solve_log_solutions: leading block vanishes at an integer above 1");
    DiffOp d1 = op.derivative_in_D();
    DiffOp d2 = d1.derivative_in_D();
    int m = op.q_degree();
    std::vector<Rational> a(static_cast<size_t>(order) + 1), b = a, c = a;
    a[0] = seeds.a0;
    b[0] = seeds.b0;
    c[0] = seeds.c0;
    if (order >= 1) {
        a[1] = seeds.a1;
        b[1] = seeds.b1;
        c[1] = seeds.c1;
    }
    for (int n = 2; n <= order; ++n) {
        Rational p0n = op.block(0).eval(Rational(n));
        Rational sa(0);
        for (int i = 1; i <= std::min(n, m); ++i) sa += a[static_cast<size_t>(n - i)] * op.block(i).eval(Rational(n - i));
        a[static_cast<size_t>(n)] = -sa / p0n;
        Rational sb(0);
        for (int i = 0; i <= std::min(n, m); ++i) sb += a[static_cast<size_t>(n - i)] * d1.block(i).eval(Rational(n - i));
        for (int i = 1; i <= std::min(n, m); ++i) sb += b[static_cast<size_t>(n - i)] * op.block(i).eval(Rational(n - i));
        b[static_cast<size_t>(n)] = -sb / p0n;
        Rational sc(0);
        for (int i = 0; i <= std::min(n, m); ++i)
            sc += a[static_cast<size_t>(n - i)] * d2.block(i).eval(Rational(n - i)) * Rational(1, 2);
        for (int i = 0; i <= std::min(n, m); ++i) sc += b[static_cast<size_t>(n - i)] * d1.block(i).eval(Rational(n - i));
        for (int i = 1; i <= std::min(n, m); ++i) sc += c[static_cast<size_t>(n - i)] * op.block(i).eval(Rational(n - i));
        c[static_cast<size_t>(n)] = -sc / p0n;
    }
    return LogSolutionTriple(QSeries(order, a), QSeries(order, b), QSeries(order, c));
}

// ---------------------------------------------------------------------------
// Instanton numbers through the hyperplane-principle change of variables.
// ---------------------------------------------------------------------------

/// Coefficients of p^0, p^1, p^2 in the product over m = 1..d of (p+m)^3.
inline std::array<Rational, 3> cubic_factorial_coeffs(int d) {
    std::array<Rational, 3> r = {Rational(1), Rational(0), Rational(0)};
    for (int m = 1; m <= d; ++m) {
        Rational m1(m);
        Rational m3 = m1.pow(3), m2 = m1.pow(2);
        Rational r0 = r[0], r1 = r[1], r2 = r[2];
        r[0] = r0 * m3;
        r[1] = r1 * m3 + r0 * Rational(3) * m2;
        r[2] = r2 * m3 + r1 * Rational(3) * m2 + r0 * Rational(3) * m1;
    }
    return r;
}

/// Solves for the instanton numbers n_d from the hyperplane-section data:
/// G(q(q')) must match (1/norm) sum_d n_d d sum_k q'^(kd)/k^2 after the
/// mirror change of variables q' = q exp(J1/I0).
inline std::vector<Rational> extract_instantons(const QSeries& I0, const QSeries& J1, const QSeries& J2,
                                                long norm, int dmax) {
    QSeries ratio1 = J1 / I0;
    QSeries G = J2 / I0 - ratio1 * ratio1 * Rational(1, 2);
    int D = I0.order();
    QSeries u(D);  // q' as a series in q
    QSeries E = ratio1.exp();
    for (int n = 1; n <= D; ++n) u.set_coeff(n, E.coeff(n - 1));
    QSeries v = u.reversion();  // q as a series in q'
    QSeries Ghat = G.compose(v);
    std::vector<Rational> n(static_cast<size_t>(dmax) + 1);
    for (int d = 1; d <= dmax; ++d) {
        Rational s = Rational(norm) * Ghat.coeff(d) * Rational(d).pow(2);
        for (int k = 1; k < d; ++k)
            if (d % k == 0) s -= Rational(k).pow(3) * n[static_cast<size_t>(k)];
        Rational nd = s / Rational(d).pow(3);
        if (!nd.is_integer())
            throw std::logic_error("extract_instantons: non-integer curve count at degree " + std::to_string(d));
        n[static_cast<size_t>(d)] = nd;
    }
    return {n.begin() + 1, n.end()};
}

/// Full pipeline for the complete-intersection threefold: localization
/// seeds, quantum matrix, operator elimination, recursion, extraction.
inline std::vector<Rational> instanton_numbers(int dmax, const TwoPointData& tp) {
    QuantumMatrix m = quantum_matrix(tp);
    DiffOp op = picard_fuchs(m);
    int order = std::max(12, dmax + 2);
    LogSolutionTriple sol =
        solve_log_solutions(op, RecursionSeeds{Rational(1), tp.a1, Rational(0), tp.b1, Rational(0), tp.c1}, order);
    QSeries I0(order), J1(order), J2(order);
    I0.set_coeff(0, Rational(1));
    for (int d = 1; d <= order; ++d) {
        auto R = cubic_factorial_coeffs(d);
        I0.set_coeff(d, R[0] * sol.psi0.coeff(d));
        J1.set_coeff(d, R[1] * sol.psi0.coeff(d) + R[0] * sol.psi1.coeff(d));
        J2.set_coeff(d, R[2] * sol.psi0.coeff(d) + R[1] * sol.psi1.coeff(d) + R[0] * sol.psi2.coeff(d));
    }
    return extract_instantons(I0, J1, J2, 57, dmax);
}

/// Instanton numbers of the quintic threefold from its closed-form
/// hypergeometric data; no localization input needed.
inline std::vector<Rational> quintic_instantons(int dmax) {
    int order = std::max(12, dmax + 2);
    QSeries I0(order), J1(order), J2(order);
    I0.set_coeff(0, Rational(1));
    for (int d = 1; d <= order; ++d) {
        // numerator product over m=1..5d of (5p+m), denominator (p+m)^5, both mod p^3
        std::array<Rational, 3> num = {Rational(1), Rational(0), Rational(0)};
        for (int m = 1; m <= 5 * d; ++m) {
            Rational m1(m);
            Rational n0 = num[0], n1 = num[1], n2 = num[2];
            num[0] = n0 * m1;
            num[1] = n1 * m1 + n0 * Rational(5);
            num[2] = n2 * m1 + n1 * Rational(5);
        }
        std::array<Rational, 3> den = {Rational(1), Rational(0), Rational(0)};
        for (int m = 1; m <= d; ++m) {
            Rational m1(m);
            Rational m5 = m1.pow(5), m4 = m1.pow(4), m3 = m1.pow(3);
            Rational d0 = den[0], d1 = den[1], d2 = den[2];
            den[0] = d0 * m5;
            den[1] = d1 * m5 + d0 * Rational(5) * m4;
            den[2] = d2 * m5 + d1 * Rational(5) * m4 + d0 * Rational(10) * m3;
        }
        Rational A = num[0] / den[0];
        Rational B = (num[1] - A * den[1]) / den[0];
        Rational C = (num[2] - A * den[2] - B * den[1]) / den[0];
        I0.set_coeff(d, A);
        J1.set_coeff(d, B);
        J2.set_coeff(d, C);
    }
    return extract_instantons(I0, J1, J2, 5, dmax);
}

// ---------------------------------------------------------------------------
// Plane-curve recursion and the multiple-cover correction formula.
// ---------------------------------------------------------------------------

/// Numbers of rational plane curves of degree d through 3d-1 general
/// points, from the associativity recursion seeded by K_1 = 1.
inline std::vector<Rational> kontsevich_numbers(int dmax) {
    std::vector<Rational> K(static_cast<size_t>(dmax) + 1);
    if (dmax >= 1) K[1] = Rational(1);
    for (int d = 2; d <= dmax; ++d) {
        Rational s(0);
        for (int d1 = 1; d1 < d; ++d1) {
            int d2 = d - d1;
            Rational term = K[static_cast<size_t>(d1)] * K[static_cast<size_t>(d2)] * Rational(d1).pow(2) * Rational(d2);
            Rational bracket = Rational(d2) * binomial(static_cast<unsigned long>(3 * d - 4),
                                                       static_cast<unsigned long>(3 * d1 - 2)) -
                               Rational(d1) * binomial(static_cast<unsigned long>(3 * d - 4),
                                                       static_cast<unsigned long>(3 * d1 - 1));
            s += term * bracket;
        }
        K[static_cast<size_t>(d)] = s;
    }
    return {K.begin() + 1, K.end()};
}

/// Degree of the degree-d moduli class from the instanton numbers:
/// N_d = sum over k | d of n_{d/k} / k^3.
inline std::vector<Rational> aspinwall_morrison(const std::vector<Rational>& n) {
    std::vector<Rational> N(n.size());
    for (size_t d = 1; d <= n.size(); ++d) {
        Rational s(0);
        for (size_t k = 1; k <= d; ++k)
            if (d % k == 0) s += n[d / k - 1] / Rational(static_cast<long>(k)).pow(3);
        N[d - 1] = s;
    }
    return N;
}

}  // namespace nets
