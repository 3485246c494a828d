#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "nets/poly.hpp"
#include "nets/qseries.hpp"

namespace nets {

/// Linear differential operator sum_a q^a P_a(D) in normal order, where
/// D = q d/dq. Composition uses D q^a = q^a (D + a), which is what the
/// coefficientwise application below encodes.
struct DiffOp {
    std::vector<Poly> blocks;  // blocks[a] = P_a(D)

    DiffOp() = default;
    explicit DiffOp(std::vector<Poly> b) : blocks(std::move(b)) { trim(); }

    int q_degree() const { return static_cast<int>(blocks.size()) - 1; }
    int order() const {
        int d = -1;
        for (const Poly& p : blocks) d = std::max(d, p.degree());
        return d;
    }
    const Poly& block(int a) const {
        static const Poly zero;
        if (a < 0 || a > q_degree()) return zero;
        return blocks[static_cast<size_t>(a)];
    }

    DiffOp derivative_in_D() const {
        std::vector<Poly> b;
        b.reserve(blocks.size());
        for (const Poly& p : blocks) b.push_back(p.derivative());
        return DiffOp(std::move(b));
    }

    /// Applies the operator to a power series: the coefficient of q^n in
    /// the image is sum_a P_a(n-a) f_{n-a}.
    QSeries apply(const QSeries& f) const {
        QSeries r(f.order());
        for (int n = 0; n <= f.order(); ++n) {
            Rational acc(0);
            for (int a = 0; a <= std::min(n, q_degree()); ++a)
                acc += block(a).eval(Rational(n - a)) * f.coeff(n - a);
            r.set_coeff(n, acc);
        }
        return r;
    }

    bool operator==(const DiffOp& o) const { return blocks == o.blocks; }

    std::string to_string() const {
        std::string s;
        for (int a = 0; a <= q_degree(); ++a) {
            if (block(a).is_zero()) continue;
            if (!s.empty()) s += "\n";
            s += "q^" + std::to_string(a) + " * ( " + block(a).to_string("D") + " )";
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        while (!blocks.empty() && blocks.back().is_zero()) blocks.pop_back();
    }
};

/// Residuals of the operator against a logarithmic solution triple: all
/// three vanish identically iff psi0, t psi0 + psi1, t^2/2 psi0 + t psi1 +
/// psi2 solve the operator.
inline std::array<QSeries, 3> log_triple_residuals(const DiffOp& op, const QSeries& psi0,
                                                   const QSeries& psi1, const QSeries& psi2) {
    DiffOp d1 = op.derivative_in_D();
    DiffOp d2 = d1.derivative_in_D();
    QSeries r0 = op.apply(psi0);
    QSeries r1 = d1.apply(psi0) + op.apply(psi1);
    QSeries r2 = d2.apply(psi0) * Rational(1, 2) + d1.apply(psi1) + op.apply(psi2);
    return {r0, r1, r2};
}

}  // namespace nets
