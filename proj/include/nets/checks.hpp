#pragma once

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "nets/conics.hpp"
#include "nets/oracles.hpp"
#include "nets/quantum.hpp"
#include "nets/reference.hpp"

namespace nets {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

namespace detail {

template <typename F>
CheckResult timed_check(const std::string& name, double budget_seconds, F&& body) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::string detail;
        r.passed = body(detail);
        r.detail = detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && r.seconds >= budget_seconds) {
        r.passed = false;
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    return r;
}

inline std::vector<WeightVector> check_weight_family(const WeightVector& w) {
    std::vector<WeightVector> ws = {w, {1, 4, -9}, {-3, 11, 2}};
    if (w == WeightVector{1, 4, -9}) ws[1] = {0, 1, 17};
    if (w == WeightVector{-3, 11, 2}) ws[2] = {0, 1, 17};
    return ws;
}

}  // namespace detail

/// Structural invariants of the fixpoint datasets and rings, aggregated
/// for the self-check mode.
inline std::vector<CheckResult> run_module_invariants(const WeightVector& w) {
    using detail::timed_check;
    std::vector<CheckResult> out;

    out.push_back(timed_check("datasets: counts, ranks, effectivity", 10.0, [&](std::string& d) {
        if (net_fixpoints().size() != 13 || fixed_lines().size() != 27 ||
            marked_line_fixpoints().size() != 108 || conic_fixpoints().size() != 144)
            return false;
        for (const NetFixpoint& fp : net_fixpoints())
            if (fp.tangent.rank() != 6 || !fp.tangent.is_effective() ||
                fp.tangent.multiplicity(Character()) != 0)
                return false;
        for (const MarkedLineFixpoint& p : marked_line_fixpoints())
            if (p.tangent.rank() != 8 || !p.tangent.is_effective()) return false;
        for (const ConicFixpoint& p : conic_fixpoints()) {
            if (p.tangent.rank() != 9 || !p.tangent.is_effective()) return false;
            if (p.h0_Op.rank() != 3 || p.h0_O2p.rank() != 5 || p.h0_Fv.rank() != 4 ||
                p.h0_S2Fv.rank() != 9)
                return false;
            bool cover = p.kind == ConicFixpoint::Kind::CoverIrreducible ||
                         p.kind == ConicFixpoint::Kind::CoverReducible;
            if (p.aut != (cover ? 2 : 1)) return false;
        }
        d = "13 + 27 + 108 + 144 records";
        return true;
    }));

    out.push_back(timed_check("datasets: closed under coordinate permutations", 10.0, [&](std::string& d) {
        std::set<std::string> nets;
        for (const NetFixpoint& fp : net_fixpoints())
            nets.insert(fp.E.to_string() + "|" + fp.F.to_string() + "|" + fp.tangent.to_string());
        for (const NetFixpoint& fp : net_fixpoints())
            for (const Perm& g : all_perms())
                if (!nets.count(fp.E.permuted(g).to_string() + "|" + fp.F.permuted(g).to_string() + "|" +
                                fp.tangent.permuted(g).to_string()))
                    return false;
        std::set<std::string> conics;
        for (const ConicFixpoint& p : conic_fixpoints())
            conics.insert(std::to_string(p.aut) + "|" + p.tangent.to_string() + "|" + p.h0_S2Fv.to_string());
        for (const ConicFixpoint& p : conic_fixpoints())
            for (const Perm& g : all_perms())
                if (!conics.count(std::to_string(p.aut) + "|" + p.tangent.permuted(g).to_string() + "|" +
                                  p.h0_S2Fv.permuted(g).to_string()))
                    return false;
        d = "orbit closure";
        return true;
    }));

    out.push_back(timed_check("fixed lines: nets reassemble from elementary pieces", 10.0, [&](std::string& d) {
        for (const FixedLine& L : fixed_lines())
            for (int e = 0; e < 2; ++e) {
                VirtualRep expect = L.point_forms * VirtualRep(L.ell) + VirtualRep(L.taut_fiber(e)).dual();
                VirtualRep net_rep;
                for (const QuadMon& m : L.net_at(e)) net_rep.add(m.character(), 1);
                if (!(net_rep == expect)) return false;
                const NetFixpoint& y = net_fixpoint_at(L.net_at(e));
                if (!(y.point_class == L.wedge_pf.inverse() * L.ell.pow(Rational(-2)) * L.taut_fiber(e)))
                    return false;
            }
        d = "54 end checks";
        return true;
    }));

    out.push_back(timed_check("basis ring: pairing symmetric, invertible, normalized", 10.0, [&](std::string& d) {
        const NetChowRing& R = net_chow_ring();
        Matrix g(NetChowRing::dim, std::vector<Rational>(NetChowRing::dim));
        for (int a = 0; a < NetChowRing::dim; ++a)
            for (int b = 0; b < NetChowRing::dim; ++b) {
                if (!(R.pairing(a, b) == R.pairing(b, a))) return false;
                g[static_cast<size_t>(a)][static_cast<size_t>(b)] = R.pairing(a, b);
            }
        if (determinant(g) == Rational(0)) return false;
        if (R.pairing(0, 12) != Rational(1) || R.pairing(1, 11) != Rational(1)) return false;
        d = "13x13 pairing";
        return true;
    }));

    out.push_back(timed_check("line-moduli ring: rank bookkeeping", 10.0, [&](std::string& d) {
        const LineModuliRing& lm = line_moduli_ring();
        if (!lm.cV.total.component(4).is_zero()) return false;
        if (!lm.pushed.total.component(3).is_zero()) return false;
        const PlaneConicRing& pc = plane_conic_ring();
        if (!pc.cV.total.component(4).is_zero()) return false;
        d = "vanishing above rank";
        return true;
    }));

    out.push_back(timed_check("weights: default vector valid on every dataset", 10.0, [&](std::string& d) {
        if (weight_degeneracy_report(w).has_value()) return false;
        if (validate_weights(net_records(), {1, 1, 1})) return false;  // symmetric triple must fail
        d = "(" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")";
        return true;
    }));

    return out;
}

/// The full conformance suite: every acceptance criterion at its stated
/// time budget, in order. All comparisons are bit-exact.
inline std::vector<CheckResult> run_acceptance_checks(const WeightVector& w) {
    using detail::timed_check;
    std::vector<CheckResult> out;

    out.push_back(timed_check("1 monomial integrals match the fourteen table values", 1.0, [&](std::string& d) {
        auto values = monomial_values_bott(w);
        if (values.size() != 14) return false;
        for (const auto& [m, v] : values)
            if (v != integrate_net_monomial(m)) return false;
        d = "14 integrals";
        return true;
    }));

    out.push_back(timed_check("2 Euler number equals the fixpoint count", 1.0, [&](std::string& d) {
        Rational chi = euler_number_bott(w);
        d = "chi = " + chi.to_string();
        return chi == Rational(13) && net_fixpoints().size() == 13;
    }));

    out.push_back(timed_check("3 line counts (147, 216, 144)", 1.0, [&](std::string& d) {
        auto counts = line_counts();
        d = counts[0].to_string() + " " + counts[1].to_string() + " " + counts[2].to_string();
        return counts[0] == Rational(147) && counts[1] == Rational(216) && counts[2] == Rational(144);
    }));

    out.push_back(timed_check("4 two-point invariants and descendant seeds", 2.0, [&](std::string& d) {
        TwoPointData tp = two_point_numbers(w);
        if (marked_line_records().size() != 108) return false;
        for (const auto& [a, b, v] : reference_two_point_table())
            if (tp.line_pairings.at({a, b}) != Rational(v)) return false;
        if (tp.a1 != Rational(3) || tp.b1 != Rational(-1) || tp.c1 != Rational(-65, 19)) return false;
        d = "12 pairings + (3, -1, -65/19)";
        return true;
    }));

    out.push_back(timed_check("5 quantum matrix matches entry for entry", 5.0, [&](std::string& d) {
        QuantumMatrix m = quantum_matrix(two_point_numbers(w));
        const QuantumMatrix& ref = reference_quantum_matrix();
        int checked = 0;
        for (int i = 0; i < NetChowRing::dim; ++i)
            for (int j = 0; j < NetChowRing::dim; ++j) {
                if (!(m[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                      ref[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                    return false;
                ++checked;
            }
        d = std::to_string(checked) + " entries";
        return checked == 169;
    }));

    out.push_back(timed_check("6 Picard-Fuchs operator matches after normalization", 60.0, [&](std::string& d) {
        DiffOp op = picard_fuchs(quantum_matrix(two_point_numbers(w)));
        d = "order " + std::to_string(op.order()) + ", q-degree " + std::to_string(op.q_degree());
        return op == reference_picard_fuchs_operator();
    }));

    out.push_back(timed_check("7 instanton numbers to degree ten", 30.0, [&](std::string& d) {
        std::vector<Rational> n = instanton_numbers(10, two_point_numbers(w));
        for (size_t i = 0; i < 10; ++i)
            if (n[i] != Rational(reference_instanton_numbers()[i])) return false;
        d = "n1..n10";
        return true;
    }));

    out.push_back(timed_check("8 conic counts with their type split", 5.0, [&](std::string& d) {
        ConicTotals t = conic_totals(w);
        d = t.balanced[0].to_string() + "+" + t.planar[0].to_string() + ", " + t.balanced[1].to_string() +
            "+" + t.planar[1].to_string() + ", " + t.balanced[2].to_string() + "+" + t.planar[2].to_string();
        return t.balanced == std::array<Rational, 3>{Rational(756), Rational(1674), Rational(468)} &&
               t.planar == std::array<Rational, 3>{Rational(0), Rational(0), Rational(36)} &&
               t.totals == std::array<Rational, 3>{Rational(756), Rational(1674), Rational(504)};
    }));

    out.push_back(timed_check("9 cross-route agreement in degrees one and two", 40.0, [&](std::string& d) {
        std::vector<Rational> n = instanton_numbers(2, two_point_numbers(w));
        auto lines = line_counts();
        ConicTotals t = conic_totals(w);
        d = "n1 = " + n[0].to_string() + ", n2 = " + n[1].to_string();
        return n[0] == lines[0] && n[1] == t.totals[0];
    }));

    out.push_back(timed_check("10 quintic degree-one number against the residue oracle", 2.0, [&](std::string& d) {
        std::vector<Rational> n = quintic_instantons(1);
        Rational oracle = oracles::quintic_lines_grassmannian();
        d = "pipeline " + n[0].to_string() + ", oracle " + oracle.to_string();
        return n[0] == Rational(2875) && oracle == n[0];
    }));

    out.push_back(timed_check("11 property suite", 120.0, [&](std::string& d) {
        // weight independence for every localized integral family
        auto ws = detail::check_weight_family(w);
        for (const auto& wv : ws)
            if (weight_degeneracy_report(wv).has_value()) return false;
        auto base_monomials = monomial_values_bott(ws[0]);
        TwoPointData base_tp = two_point_numbers(ws[0]);
        auto base_conics = conic11_counts(ws[0]);
        for (size_t i = 1; i < ws.size(); ++i) {
            auto mi = monomial_values_bott(ws[i]);
            for (size_t k = 0; k < mi.size(); ++k)
                if (!(mi[k].second == base_monomials[k].second)) return false;
            TwoPointData tpi = two_point_numbers(ws[i]);
            if (!(tpi.line_pairings == base_tp.line_pairings) || tpi.a1 != base_tp.a1 ||
                tpi.b1 != base_tp.b1 || tpi.c1 != base_tp.c1)
                return false;
            if (!(conic11_counts(ws[i]) == base_conics)) return false;
        }
        // integrality of integer-class integrals and of the curve counts
        for (const auto& [m, v] : base_monomials)
            if (!v.is_integer()) return false;
        for (const auto& [k, v] : base_tp.line_pairings)
            if (!v.is_integer()) return false;
        for (const auto& v : base_conics)
            if (!v.is_integer()) return false;
        std::vector<Rational> n = instanton_numbers(10, base_tp);
        for (const auto& v : n)
            if (!v.is_integer()) return false;
        // the operator annihilates its logarithmic solution triple
        const DiffOp& op = reference_picard_fuchs_operator();
        LogSolutionTriple sol = solve_log_solutions(
            op, RecursionSeeds{Rational(1), base_tp.a1, Rational(0), base_tp.b1, Rational(0), base_tp.c1}, 12);
        auto res = log_triple_residuals(op, sol.psi0, sol.psi1, sol.psi2);
        if (!res[0].is_zero() || !res[1].is_zero() || !res[2].is_zero()) return false;
        // the printed section operator annihilates the section coefficients
        QSeries I0(10);
        I0.set_coeff(0, Rational(1));
        for (int deg = 1; deg <= 10; ++deg)
            I0.set_coeff(deg, cubic_factorial_coeffs(deg)[0] * sol.psi0.coeff(deg));
        if (!reference_section_operator().apply(I0).is_zero()) return false;
        // the ring relation annihilates the identity column
        QuantumMatrix m = quantum_matrix(base_tp);
        std::vector<Poly> e0(NetChowRing::dim);
        e0[0] = Poly(1);
        std::vector<std::vector<Poly>> powers = {e0};
        for (int k = 1; k <= 10; ++k) powers.push_back(apply_matrix(m, powers.back()));
        Poly q = Poly::x();
        for (int i = 0; i < NetChowRing::dim; ++i) {
            Poly val = powers[10][static_cast<size_t>(i)] - Poly(34) * q * powers[7][static_cast<size_t>(i)] -
                       Poly(278) * q * q * powers[4][static_cast<size_t>(i)] -
                       Poly(243) * q * q * q * powers[1][static_cast<size_t>(i)];
            if (!val.is_zero()) return false;
        }
        // plane-curve numbers with the point-count oracle, and the
        // multiple-cover formula on the reference inputs
        std::vector<Rational> K = kontsevich_numbers(4);
        if (K[1] != Rational(oracles::conics_through_five_points())) return false;
        if (K[1] != Rational(1) || K[2] != Rational(12) || K[3] != Rational(620)) return false;
        std::vector<Rational> nref;
        for (long long v : reference_instanton_numbers()) nref.emplace_back(Rational(v));
        if (aspinwall_morrison(nref)[1] != Rational(6195, 8)) return false;
        d = "weight independence, integrality, annihilators, ring relation, recursion oracles";
        return true;
    }));

    return out;
}

}  // namespace nets
