#pragma once

#include <memory>
#include <vector>

#include "nets/chern.hpp"
#include "nets/records.hpp"

namespace nets {

struct DataIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Value of a basis class of the net Chow ring from local Chern data.
/// Ename/Fname name the bundles whose weights give c_i of the dual rank-3
/// bundle and c_2 of the rank-2 bundle.
inline Rational basis_class_value(int idx, const LocalWeights& lw, const std::string& Ename,
                                  const std::string& Fname) {
    const auto& B = net_chow_ring().basis(idx);
    Rational v = B.coeff;
    if (B.mono.i) v *= lw.chern(Ename, 1).pow(B.mono.i);
    if (B.mono.j) v *= lw.chern(Ename, 2).pow(B.mono.j);
    if (B.mono.k) v *= lw.chern(Ename, 3).pow(B.mono.k);
    if (B.mono.l) v *= lw.chern(Fname, 2).pow(B.mono.l);
    return v;
}

/// All degree-six monomials in the Chern generators integrated over the net
/// variety by the fixed-point residue formula.
inline std::vector<std::pair<NetMonomial, Rational>> monomial_values_bott(const WeightVector& w) {
    std::vector<std::pair<NetMonomial, Rational>> out;
    for (const NetMonomial& m : net_degree6_monomials()) {
        IntegrandSpec spec{6, [m](const LocalWeights& lw) {
                               Rational v(1);
                               if (m.i) v *= lw.chern("Ev", 1).pow(m.i);
                               if (m.j) v *= lw.chern("Ev", 2).pow(m.j);
                               if (m.k) v *= lw.chern("Ev", 3).pow(m.k);
                               if (m.l) v *= lw.chern("F", 2).pow(m.l);
                               return v;
                           }};
        out.emplace_back(m, bott_integral(net_records(), spec, w));
    }
    return out;
}

/// Euler number of the net variety as a residue sum: the top Chern class of
/// the tangent bundle contributes 1 per fixpoint.
inline Rational euler_number_bott(const WeightVector& w) {
    IntegrandSpec spec{6, [](const LocalWeights& lw) { return lw.euler("TN"); }};
    return bott_integral(net_records(), spec, w);
}

/// The basis ring is only handed out once its integration table has been
/// reproduced by an independent localization run.
inline const NetChowRing& verified_net_chow_ring(const WeightVector& w) {
    static const bool checked = [](const WeightVector& weights) {
        for (const auto& [m, v] : monomial_values_bott(weights))
            if (v != integrate_net_monomial(m))
                throw DataIntegrityError("monomial integration table disagrees with localization");
        return true;
    }(w);
    (void)checked;
    return net_chow_ring();
}

// ---------------------------------------------------------------------------
// Chow ring of the moduli of lines: a projective plane bundle over the
// product of the plane and its dual.
// ---------------------------------------------------------------------------

struct LineModuliRing {
    std::unique_ptr<GradedRing> ring;
    ChowClass tau, tau_check, sigma;
    TotalChernClass cV;      // the defining rank-3 bundle
    TotalChernClass pushed;  // rank-2 pushforward of the tautological degree-one sheaf
};

inline const LineModuliRing& line_moduli_ring() {
    static const LineModuliRing data = [] {
        LineModuliRing d;
        d.ring = std::make_unique<GradedRing>(
            std::vector<GradedRing::Generator>{{"t", 1, 2}, {"tc", 1, 2}, {"s", 1, 2}}, 6);
        const GradedRing& R = *d.ring;
        d.tau = R.generator(0);
        d.tau_check = R.generator(1);
        d.sigma = R.generator(2);

        // c of the twisted cotangent sheaf of the plane and its pieces
        TotalChernClass omega{2, R.one() - d.tau + d.tau * d.tau};
        TotalChernClass wedge2_omega{1, R.one() - d.tau};
        TotalChernClass omega_tw = tensor_line(omega, -d.tau_check);

        ChowClass total = omega.total * omega.total * omega.total *
                          wedge2_omega.total.unit_inverse() * omega_tw.total.unit_inverse();
        d.cV = {3, total.component(0) + total.component(1) + total.component(2) + total.component(3)};

        ChowClass rel = d.cV.component(1) * d.sigma * d.sigma - d.cV.component(2) * d.sigma + d.cV.component(3);
        d.ring->set_power_relation(2, rel);
        d.ring->set_integral_monomial({2, 2, 2});

        // pushforward of the tautological degree-one sheaf: cokernel of a
        // line inside the dual of the defining bundle
        ChowClass inv = (R.one() - d.sigma).unit_inverse();
        ChowClass ktotal = dual_bundle(d.cV).total * inv;
        d.pushed = {2, ktotal.component(0) + ktotal.component(1) + ktotal.component(2)};
        return d;
    }();
    return data;
}

/// Virtual numbers of lines on the three Calabi-Yau sections.
inline std::array<Rational, 3> line_counts() {
    const LineModuliRing& d = line_moduli_ring();
    const GradedRing& R = *d.ring;
    ChowClass twist = d.tau + d.tau_check + d.tau_check;  // det of the dual pencil bundle

    TotalChernClass Op1 = tensor_line(d.pushed, twist);
    TotalChernClass O2p1 = sym_rank2_bundle(Op1, 2);
    TotalChernClass Fv1 = whitney_sum(total_of_line(d.tau + d.tau_check), tensor_line(d.pushed, d.tau_check));
    TotalChernClass S2Fv1 = sym2_bundle(Fv1);

    ChowClass c2 = Op1.component(2);
    Rational on_x = R.integrate(c2 * c2 * c2);
    Rational on_y = R.integrate(Fv1.component(3) * O2p1.component(3));
    Rational on_z = R.integrate(S2Fv1.component(6));
    return {on_x, on_y, on_z};
}

// ---------------------------------------------------------------------------
// Chow ring of the plane-conic component of the conic moduli: a projective
// five-space bundle with the symmetric square of the defining bundle.
// ---------------------------------------------------------------------------

struct PlaneConicRing {
    std::unique_ptr<GradedRing> ring;
    ChowClass tau, tau_check, xi;
    TotalChernClass cV;
    TotalChernClass cVdual;
    TotalChernClass pushed2;  // rank-5 pushforward of the squared tautological sheaf
};

inline const PlaneConicRing& plane_conic_ring() {
    static const PlaneConicRing data = [] {
        PlaneConicRing d;
        d.ring = std::make_unique<GradedRing>(
            std::vector<GradedRing::Generator>{{"t", 1, 2}, {"tc", 1, 2}, {"xi", 1, 5}}, 9);
        const GradedRing& R = *d.ring;
        d.tau = R.generator(0);
        d.tau_check = R.generator(1);
        d.xi = R.generator(2);

        TotalChernClass omega{2, R.one() - d.tau + d.tau * d.tau};
        TotalChernClass wedge2_omega{1, R.one() - d.tau};
        TotalChernClass omega_tw = tensor_line(omega, -d.tau_check);
        ChowClass total = omega.total * omega.total * omega.total *
                          wedge2_omega.total.unit_inverse() * omega_tw.total.unit_inverse();
        d.cV = {3, total.component(0) + total.component(1) + total.component(2) + total.component(3)};
        d.cVdual = dual_bundle(d.cV);

        TotalChernClass s2v = sym2_bundle(d.cV);
        ChowClass rel = R.zero();
        for (int i = 1; i <= 6; ++i) {
            ChowClass term = s2v.component(i) * d.xi.pow(6 - i);
            rel += (i % 2 == 1) ? term : -term;
        }
        d.ring->set_power_relation(2, rel);
        d.ring->set_integral_monomial({2, 2, 5});

        ChowClass inv = (R.one() - d.xi).unit_inverse();
        TotalChernClass s2vdual = sym2_bundle(d.cVdual);
        ChowClass m = s2vdual.total * inv;
        ChowClass mt = R.zero();
        for (int k = 0; k <= 5; ++k) mt += m.component(k);
        d.pushed2 = {5, mt};
        return d;
    }();
    return data;
}

/// Virtual numbers of plane conics (unbalanced splitting type) on the three
/// Calabi-Yau sections.
inline std::array<Rational, 3> conic02_counts() {
    const PlaneConicRing& d = plane_conic_ring();
    const GradedRing& R = *d.ring;
    ChowClass twist = d.tau + d.tau_check + d.tau_check;

    TotalChernClass Op2 = tensor_line(d.cVdual, twist);
    TotalChernClass O2p2 = tensor_line(d.pushed2, twist + twist);
    TotalChernClass Fv2 = whitney_sum(total_of_line(d.tau + d.tau_check), tensor_line(d.cVdual, d.tau_check));
    TotalChernClass S2Fv2 = whitney_sum(
        whitney_sum(total_of_line(d.tau + d.tau + d.tau_check + d.tau_check), tensor_line(d.cVdual, twist)),
        tensor_line(d.pushed2, d.tau_check + d.tau_check));

    ChowClass c3 = Op2.component(3);
    Rational on_x = R.integrate(c3 * c3 * c3);
    Rational on_y = R.integrate(Fv2.component(4) * O2p2.component(5));
    Rational on_z = R.integrate(S2Fv2.component(9));
    return {on_x, on_y, on_z};
}

}  // namespace nets
