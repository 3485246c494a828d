#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nets/rep_ring.hpp"

namespace nets {

// ---------------------------------------------------------------------------
// Torus-fixed data on the net variety and on its spaces of lines and conics.
// Everything is generated from a handful of seed configurations by applying
// the coordinate permutations, so the symmetric-group action is the single
// source of truth for the full lists.
// ---------------------------------------------------------------------------

/// Quadratic monomial x_i x_j, i <= j.
struct QuadMon {
    int i = 0, j = 0;

    static QuadMon make(int a, int b) { return a <= b ? QuadMon{a, b} : QuadMon{b, a}; }
    Character character() const { return Character::lambda(i) * Character::lambda(j); }
    QuadMon permuted(const Perm& g) const { return make(g[static_cast<size_t>(i)], g[static_cast<size_t>(j)]); }
    bool operator<(const QuadMon& o) const { return std::array<int, 2>{i, j} < std::array<int, 2>{o.i, o.j}; }
    bool operator==(const QuadMon& o) const { return i == o.i && j == o.j; }
    std::string to_string() const { return "x" + std::to_string(i) + "x" + std::to_string(j); }
};

/// A monomial net: three quadratic generators, kept sorted.
using Net = std::array<QuadMon, 3>;

inline Net make_net(QuadMon a, QuadMon b, QuadMon c) {
    Net n{a, b, c};
    std::sort(n.begin(), n.end());
    return n;
}
inline Net permuted_net(const Net& n, const Perm& g) {
    return make_net(n[0].permuted(g), n[1].permuted(g), n[2].permuted(g));
}
inline std::string net_to_string(const Net& n) {
    return n[0].to_string() + "," + n[1].to_string() + "," + n[2].to_string();
}

// ---------------------------------------------------------------------------
// Fixpoints of the net variety.
// ---------------------------------------------------------------------------

struct NetFixpoint {
    int index = 0;
    std::string id;
    Net net;
    VirtualRep E;  // rank 3, the net itself
    VirtualRep F;  // rank 2, kernel of the presentation
    int isotropy_order = 1;
    VirtualRep tangent;        // rank 6, no trivial character
    Character point_class;     // fiber of O(p) = det(E)^(-1)
};

/// Tangent space at a fixed net from the Euler-sequence presentation:
/// [F]^(-1)[E](sum of coordinate characters) - [E]^(-1)[E] - [F]^(-1)[F] + 1.
inline VirtualRep tangent_at_net_fixpoint(const VirtualRep& E, const VirtualRep& F) {
    VirtualRep t = F.dual() * E * coordinate_space_rep() - E.dual() * E - F.dual() * F + VirtualRep::one();
    if (!t.is_effective())
        throw std::logic_error("tangent_at_net_fixpoint: cancellation left a negative multiplicity");
    return t;
}

inline const std::vector<NetFixpoint>& net_fixpoints() {
    static const std::vector<NetFixpoint> points = [] {
        struct Seed {
            Net net;
            std::vector<Character> f_chars;
            int isotropy;
        };
        auto ch = [](int a, int b, int c) {
            return Character(Rational(a), Rational(b), Rational(c));
        };
        const std::vector<Seed> seeds = {
            // triangle of coordinate points
            {make_net(QuadMon::make(1, 2), QuadMon::make(0, 1), QuadMon::make(0, 2)),
             {ch(1, 1, 1), ch(1, 1, 1)},
             6},
            // point doubled on a line plus another point of the line
            {make_net(QuadMon::make(1, 1), QuadMon::make(1, 2), QuadMon::make(0, 2)),
             {ch(0, 2, 1), ch(1, 1, 1)},
             1},
            // full first-order neighborhood of a point
            {make_net(QuadMon::make(1, 1), QuadMon::make(1, 2), QuadMon::make(2, 2)),
             {ch(0, 2, 1), ch(0, 1, 2)},
             2},
            // nets with a line as base locus
            {make_net(QuadMon::make(1, 1), QuadMon::make(1, 2), QuadMon::make(0, 1)),
             {ch(0, 2, 1), ch(1, 2, 0)},
             2},
        };
        std::vector<NetFixpoint> out;
        std::set<std::string> seen;
        for (const Seed& s : seeds) {
            for (const Perm& g : all_perms()) {
                Net net = permuted_net(s.net, g);
                std::string key = net_to_string(net);
                if (!seen.insert(key).second) continue;
                NetFixpoint fp;
                fp.index = static_cast<int>(out.size());
                fp.id = "net[" + key + "]";
                fp.net = net;
                for (const QuadMon& m : net) fp.E.add(m.character(), 1);
                for (const Character& c : s.f_chars) fp.F.add(c.permuted(g), 1);
                fp.isotropy_order = s.isotropy;
                fp.tangent = tangent_at_net_fixpoint(fp.E, fp.F);
                Character det;
                for (const QuadMon& m : net) det = det * m.character();
                fp.point_class = det.inverse();
                out.push_back(std::move(fp));
            }
        }
        if (out.size() != 13) throw std::logic_error("net_fixpoints: expected 13 fixpoints");
        return out;
    }();
    return points;
}

inline const NetFixpoint& net_fixpoint_at(const Net& net) {
    static const std::map<std::string, int> lookup = [] {
        std::map<std::string, int> m;
        for (const NetFixpoint& fp : net_fixpoints()) m[net_to_string(fp.net)] = fp.index;
        return m;
    }();
    auto it = lookup.find(net_to_string(net));
    if (it == lookup.end()) throw std::logic_error("net_fixpoint_at: unknown net " + net_to_string(net));
    return net_fixpoints()[static_cast<size_t>(it->second)];
}

// ---------------------------------------------------------------------------
// Fixed lines.
// ---------------------------------------------------------------------------

/// A torus-fixed line of nets: a fixed pencil plus a moving generator
/// sweeping between two monomials. moving[0] sits at parameter 0,
/// moving[1] at infinity.
struct FixedLine {
    std::array<QuadMon, 2> pencil;
    std::array<QuadMon, 2> moving;
    // derived from the pencil
    Character ell;         // character of the linear form cutting the base line
    VirtualRep point_forms;  // rank-2 space of linear forms vanishing at the base point
    Character wedge_pf;    // product of the two point-form characters

    static FixedLine make(std::array<QuadMon, 2> pencil, std::array<QuadMon, 2> moving) {
        FixedLine L;
        L.pencil = pencil;
        L.moving = moving;
        // the pencil factors as (linear form) * (pencil of forms at the point)
        int common = -1;
        for (int v : {pencil[0].i, pencil[0].j}) {
            int count1 = (pencil[0].i == v) + (pencil[0].j == v);
            int count2 = (pencil[1].i == v) + (pencil[1].j == v);
            if (count1 >= 1 && count2 >= 1) { common = v; break; }
        }
        if (common < 0) throw std::logic_error("FixedLine: pencil has no common linear factor");
        auto residual = [common](const QuadMon& m) { return m.i == common ? m.j : m.i; };
        int u0 = residual(pencil[0]);
        int u1 = residual(pencil[1]);
        L.ell = Character::lambda(common);
        L.point_forms.add(Character::lambda(u0), 1);
        L.point_forms.add(Character::lambda(u1), 1);
        L.wedge_pf = Character::lambda(u0) * Character::lambda(u1);
        return L;
    }

    FixedLine permuted(const Perm& g) const {
        return make({pencil[0].permuted(g), pencil[1].permuted(g)},
                    {moving[0].permuted(g), moving[1].permuted(g)});
    }

    std::string key_oriented() const {
        std::array<QuadMon, 2> p = pencil;
        std::sort(p.begin(), p.end());
        return p[0].to_string() + "," + p[1].to_string() + "|" + moving[0].to_string() + ">" + moving[1].to_string();
    }
    std::string key_unoriented() const {
        std::array<QuadMon, 2> p = pencil, m = moving;
        std::sort(p.begin(), p.end());
        std::sort(m.begin(), m.end());
        return p[0].to_string() + "," + p[1].to_string() + "|" + m[0].to_string() + "," + m[1].to_string();
    }

    Net net_at(int end) const { return make_net(pencil[0], pencil[1], moving[static_cast<size_t>(end)]); }
    /// Fiber character of the tautological degree-one bundle at an end.
    Character taut_fiber(int end) const { return moving[static_cast<size_t>(end)].character().inverse(); }
    /// Sections of the tautological bundle: fibers at the two ends.
    VirtualRep taut_sections() const {
        VirtualRep s(taut_fiber(0));
        s.add(taut_fiber(1), 1);
        return s;
    }
    /// Tangent character of the line at one of its ends.
    Character tangent_char_at(int end) const {
        return moving[static_cast<size_t>(1 - end)].character() * moving[static_cast<size_t>(end)].character().inverse();
    }

    /// Sections of the restricted tangent bundle of the ambient variety.
    VirtualRep h0_tangent_ambient() const {
        VirtualRep S = taut_sections();
        VirtualRep FE = point_forms.dual() + VirtualRep(ell.inverse()) + S * point_forms;
        VirtualRep EE = point_forms.dual() * point_forms + S * point_forms * VirtualRep(ell) + VirtualRep::one();
        VirtualRep FF = S * VirtualRep(wedge_pf) + VirtualRep::one() * 2;
        return FE * coordinate_space_rep() - EE - FF + VirtualRep::one();
    }
    /// Sections of the tangent bundle of the line itself.
    VirtualRep h0_tangent_line() const { return taut_sections().dual() * taut_sections() - VirtualRep::one(); }
    /// Tangent space of the moduli of lines at this point (rank 6).
    VirtualRep moduli_tangent() const { return h0_tangent_ambient() - h0_tangent_line(); }

    // sections of the integrand bundles restricted to the line
    VirtualRep h0_Op() const { return VirtualRep(wedge_pf.inverse() * ell.pow(Rational(-2))) * taut_sections(); }
    VirtualRep h0_O2p() const { return h0_Op().sym(2); }
    VirtualRep h0_Fv() const {
        return VirtualRep(ell.inverse()) * (VirtualRep(wedge_pf.inverse()) + taut_sections());
    }
    VirtualRep h0_S2Fv() const { return h0_Fv().sym(2); }
};

inline const std::vector<FixedLine>& fixed_lines() {
    static const std::vector<FixedLine> lines = [] {
        auto M = [](int a, int b) { return QuadMon::make(a, b); };
        const std::vector<FixedLine> seeds = {
            FixedLine::make({M(0, 1), M(0, 2)}, {M(1, 1), M(2, 2)}),
            FixedLine::make({M(0, 1), M(0, 2)}, {M(1, 2), M(1, 1)}),
            FixedLine::make({M(1, 1), M(1, 2)}, {M(0, 1), M(2, 2)}),
            FixedLine::make({M(1, 1), M(1, 2)}, {M(2, 2), M(0, 2)}),
            FixedLine::make({M(1, 1), M(1, 2)}, {M(0, 2), M(0, 1)}),
        };
        std::vector<FixedLine> out;
        std::set<std::string> seen;
        for (const FixedLine& seed : seeds)
            for (const Perm& g : all_perms()) {
                FixedLine L = seed.permuted(g);
                if (!seen.insert(L.key_unoriented()).second) continue;
                out.push_back(L);
            }
        if (out.size() != 27) throw std::logic_error("fixed_lines: expected 27 fixed lines");
        return out;
    }();
    return lines;
}

/// A single seed line by type (1..5) and permutation, prior to dedup.
inline FixedLine fixed_line_seed(int type, const Perm& g) {
    auto M = [](int a, int b) { return QuadMon::make(a, b); };
    FixedLine L;
    switch (type) {
        case 1: L = FixedLine::make({M(0, 1), M(0, 2)}, {M(1, 1), M(2, 2)}); break;
        case 2: L = FixedLine::make({M(0, 1), M(0, 2)}, {M(1, 2), M(1, 1)}); break;
        case 3: L = FixedLine::make({M(1, 1), M(1, 2)}, {M(0, 1), M(2, 2)}); break;
        case 4: L = FixedLine::make({M(1, 1), M(1, 2)}, {M(2, 2), M(0, 2)}); break;
        case 5: L = FixedLine::make({M(1, 1), M(1, 2)}, {M(0, 2), M(0, 1)}); break;
        default: throw std::invalid_argument("fixed_line_seed: type must be 1..5");
    }
    return L.permuted(g);
}

// ---------------------------------------------------------------------------
// Fixpoints of the two-marked moduli of lines.
// ---------------------------------------------------------------------------

struct MarkedLineFixpoint {
    std::string id;
    const FixedLine* line = nullptr;
    bool contracted = false;  // both markings on a collapsed component
    VirtualRep tangent;       // rank 8
    Character psi;            // weight of the cotangent line at the first marking
    const NetFixpoint* target1 = nullptr;
    const NetFixpoint* target2 = nullptr;
};

inline const std::vector<MarkedLineFixpoint>& marked_line_fixpoints() {
    static const std::vector<MarkedLineFixpoint> points = [] {
        std::vector<MarkedLineFixpoint> out;
        for (const FixedLine& L : fixed_lines()) {
            VirtualRep base = L.h0_tangent_ambient() - L.h0_tangent_line();
            for (int e = 0; e < 2; ++e) {
                const NetFixpoint& at_e = net_fixpoint_at(L.net_at(e));
                const NetFixpoint& other = net_fixpoint_at(L.net_at(1 - e));
                Character te = L.tangent_char_at(e);
                Character to = L.tangent_char_at(1 - e);
                {
                    MarkedLineFixpoint p;
                    p.id = L.key_oriented() + "|marks:" + std::to_string(e) + std::to_string(1 - e);
                    p.line = &L;
                    p.tangent = base + VirtualRep(te) + VirtualRep(to);
                    p.psi = te.inverse();
                    p.target1 = &at_e;
                    p.target2 = &other;
                    out.push_back(std::move(p));
                }
                {
                    MarkedLineFixpoint p;
                    p.id = L.key_oriented() + "|marks:" + std::to_string(e) + "c";
                    p.line = &L;
                    p.contracted = true;
                    p.tangent = base + VirtualRep(te) * 2;
                    p.psi = Character();  // collapsed component: trivial cotangent weight
                    p.target1 = &at_e;
                    p.target2 = &at_e;
                    out.push_back(std::move(p));
                }
            }
        }
        if (out.size() != 108) throw std::logic_error("marked_line_fixpoints: expected 108 fixpoints");
        return out;
    }();
    return points;
}

// ---------------------------------------------------------------------------
// Fixpoints of the moduli of balanced-type conics.
// ---------------------------------------------------------------------------

struct ConicFixpoint {
    enum class Kind { Smooth, LinePair, BoundaryPair, CoverReducible, CoverIrreducible };

    Kind kind = Kind::Smooth;
    std::string id;
    int aut = 1;
    VirtualRep tangent;  // rank 9
    VirtualRep h0_Op;    // rank 3
    VirtualRep h0_O2p;   // rank 5
    VirtualRep h0_Fv;    // rank 4
    VirtualRep h0_S2Fv;  // rank 9
};

namespace detail {

/// Shared node contributions for two-component conic fixpoints.
inline void node_corrections(ConicFixpoint& p, const NetFixpoint& y) {
    p.h0_Op -= VirtualRep(y.point_class);
    p.h0_O2p -= VirtualRep(y.point_class * y.point_class);
    p.h0_Fv -= y.F.dual();
    p.h0_S2Fv -= y.F.sym(2).dual();
}

inline ConicFixpoint make_line_pair(const FixedLine& l1, const FixedLine& l2) {
    if (!(l1.net_at(0) == l2.net_at(0)))
        throw std::logic_error("make_line_pair: components do not meet at their zero ends");
    const NetFixpoint& y = net_fixpoint_at(l1.net_at(0));
    Character t1 = l1.tangent_char_at(0), t2 = l2.tangent_char_at(0);
    ConicFixpoint p;
    p.kind = ConicFixpoint::Kind::LinePair;
    p.id = "pair[" + l1.key_oriented() + " & " + l2.key_oriented() + "]";
    p.tangent = l1.moduli_tangent() + l2.moduli_tangent() + VirtualRep(t1 * t2) + VirtualRep(t1) +
                VirtualRep(t2) - y.tangent;
    p.h0_Op = l1.h0_Op() + l2.h0_Op();
    p.h0_O2p = l1.h0_O2p() + l2.h0_O2p();
    p.h0_Fv = l1.h0_Fv() + l2.h0_Fv();
    p.h0_S2Fv = l1.h0_S2Fv() + l2.h0_S2Fv();
    node_corrections(p, y);
    return p;
}

/// Line pair inside one plane of the plane-conic locus: the obstruction
/// class at the node enters, and the normal direction of the incidence
/// locus is removed.
inline ConicFixpoint make_boundary_pair(const FixedLine& l1, const FixedLine& l2,
                                        const Character& h1_correction, const Character& normal_dir) {
    ConicFixpoint p = make_line_pair(l1, l2);
    p.kind = ConicFixpoint::Kind::BoundaryPair;
    p.id = "pair-b[" + l1.key_oriented() + " & " + l2.key_oriented() + "]";
    p.tangent += VirtualRep(h1_correction);
    p.tangent -= VirtualRep(normal_dir);
    return p;
}

inline ConicFixpoint make_reducible_cover(const FixedLine& L, const Character& h1_correction,
                                          const Character& normal_dir) {
    const NetFixpoint& y = net_fixpoint_at(L.net_at(0));
    Character t = L.tangent_char_at(0);
    ConicFixpoint p;
    p.kind = ConicFixpoint::Kind::CoverReducible;
    p.aut = 2;
    p.id = "cover2r[" + L.key_oriented() + "]";
    p.tangent = L.moduli_tangent() * 2 + VirtualRep(t * t) + VirtualRep(t) * 2 - y.tangent +
                VirtualRep(h1_correction) - VirtualRep(normal_dir);
    p.h0_Op = L.h0_Op() * 2;
    p.h0_O2p = L.h0_O2p() * 2;
    p.h0_Fv = L.h0_Fv() * 2;
    p.h0_S2Fv = L.h0_S2Fv() * 2;
    node_corrections(p, y);
    return p;
}

inline ConicFixpoint make_irreducible_cover(const FixedLine& L, const Character& normal_dir) {
    const Rational half(1, 2);
    VirtualRep S = L.taut_sections();
    VirtualRep Shalf = S.sym(2).power_k(half);   // sections of the pulled-back degree-one bundle, squared cover
    VirtualRep W4 = S.sym(4).power_k(half);
    const VirtualRep& P = L.point_forms;
    Character s0 = L.taut_fiber(0), s1 = L.taut_fiber(1);
    Character root = (s0 * s1).pow(half);

    VirtualRep FE = P.dual() + VirtualRep(L.ell.inverse()) + Shalf * P;
    VirtualRep EE = P.dual() * P + Shalf * P * VirtualRep(L.ell) + VirtualRep::one();
    VirtualRep FF = Shalf * VirtualRep(L.wedge_pf) + VirtualRep::one() * 2;
    VirtualRep h1_FF(L.wedge_pf.inverse() * root.inverse());
    VirtualRep h0_TN = FE * coordinate_space_rep() - EE - FF + VirtualRep::one() + h1_FF;
    // sections of the tangent bundle of the source curve of the 2:1 cover
    VirtualRep half_sections;
    half_sections.add(s0.pow(half), 1);
    half_sections.add(s1.pow(half), 1);
    VirtualRep h0_TC = half_sections.dual() * half_sections - VirtualRep::one();

    ConicFixpoint p;
    p.kind = ConicFixpoint::Kind::CoverIrreducible;
    p.aut = 2;
    p.id = "cover2i[" + L.key_oriented() + "]";
    p.tangent = h0_TN - h0_TC - VirtualRep(normal_dir);
    Character winv = L.wedge_pf.inverse();
    Character ellinv2 = L.ell.pow(Rational(-2));
    p.h0_Op = VirtualRep(winv * ellinv2) * Shalf;
    p.h0_Fv = VirtualRep(L.ell.inverse()) * (VirtualRep(winv) + Shalf);
    p.h0_O2p = VirtualRep(winv * winv * ellinv2 * ellinv2) * W4;
    p.h0_S2Fv = VirtualRep(ellinv2) *
                (VirtualRep(winv * winv) + VirtualRep(winv) * Shalf + W4);
    return p;
}

}  // namespace detail

inline const std::vector<ConicFixpoint>& conic_fixpoints() {
    static const std::vector<ConicFixpoint> points = [] {
        auto M = [](int a, int b) { return QuadMon::make(a, b); };
        std::vector<ConicFixpoint> out;
        std::set<std::string> seen;

        // Smooth fixed conics: two seed families, trivial isotropy.
        struct SmoothSeed {
            int a11, a21, a22;  // variable indices of the constant matrix entries
            int l0, linf;       // fibers of the moving entry at 0 and infinity
        };
        const std::vector<SmoothSeed> smooth_seeds = {{0, 2, 1, 0, 2}, {0, 1, 0, 1, 2}};
        for (const SmoothSeed& s : smooth_seeds)
            for (const Perm& g : all_perms()) {
                auto lam = [&g](int v) { return Character::lambda(g[static_cast<size_t>(v)]); };
                Character A = lam(s.a11), B = lam(s.a21), C2 = lam(s.a22);
                Character L0 = lam(s.l0), Linf = lam(s.linf);
                VirtualRep h;  // sections of the dual of the moving-entry line bundle
                h.add(L0.inverse(), 1);
                h.add(Linf.inverse(), 1);
                VirtualRep FE = h * (VirtualRep::one() + VirtualRep(B.inverse() * C2)) +
                                VirtualRep(B.inverse()) + VirtualRep(A.inverse()) + VirtualRep(C2.inverse()) +
                                VirtualRep(A.inverse() * C2.inverse() * B);
                VirtualRep EE = h * (VirtualRep(C2) + VirtualRep(A * C2 * B.inverse())) +
                                VirtualRep(B.inverse() * A) + VirtualRep(A.inverse() * B) +
                                VirtualRep::one() * 3;
                VirtualRep FF = VirtualRep(B.inverse() * C2) + VirtualRep(C2.inverse() * B) +
                                VirtualRep::one() * 2;
                VirtualRep h0_TN = FE * coordinate_space_rep() - EE - FF + VirtualRep::one();
                VirtualRep h0_TC = h.dual() * h - VirtualRep::one();

                ConicFixpoint p;
                p.kind = ConicFixpoint::Kind::Smooth;
                p.id = "smooth[" + A.to_string() + ";" + B.to_string() + ";" + C2.to_string() + ";" +
                       L0.to_string() + ">" + Linf.to_string() + "]";
                p.tangent = h0_TN - h0_TC;
                Character Ainv = A.inverse(), Binv = B.inverse(), Cinv = C2.inverse();
                p.h0_Op = VirtualRep(Ainv * Ainv * Cinv * Binv) * h.sym(2);
                p.h0_O2p = VirtualRep((Ainv * Ainv * Cinv * Binv).pow(Rational(2))) * h.sym(4);
                p.h0_Fv = VirtualRep(Ainv) * (VirtualRep(Binv) + VirtualRep(Cinv)) * h;
                VirtualRep BC;
                BC.add(B, 1);
                BC.add(C2, 1);
                p.h0_S2Fv = BC.sym(2).dual() * VirtualRep(Ainv * Ainv) * h.sym(2);
                if (seen.insert(p.id).second) out.push_back(std::move(p));
            }
        if (out.size() != 12) throw std::logic_error("conic_fixpoints: expected 12 smooth records");

        // Fixed line pairs away from the plane-conic locus: four seed rows,
        // each with a two-by-two square of far-end choices.
        struct HalfSeed {
            std::array<QuadMon, 2> pencil;
            QuadMon node;
            std::array<QuadMon, 2> far;
        };
        struct PairSeed {
            HalfSeed h1, h2;
        };
        const std::vector<PairSeed> pair_seeds = {
            {{{M(1, 1), M(0, 1)}, M(1, 2), {M(0, 2), M(0, 0)}},
             {{M(1, 1), M(1, 2)}, M(0, 1), {M(0, 2), M(2, 2)}}},
            {{{M(1, 2), M(0, 1)}, M(0, 2), {M(0, 0), M(2, 2)}},
             {{M(1, 2), M(0, 2)}, M(0, 1), {M(0, 0), M(1, 1)}}},
            {{{M(1, 2), M(0, 1)}, M(2, 2), {M(0, 0), M(0, 2)}},
             {{M(1, 2), M(2, 2)}, M(0, 1), {M(0, 2), M(1, 1)}}},
            {{{M(1, 2), M(1, 1)}, M(2, 2), {M(0, 1), M(0, 2)}},
             {{M(1, 2), M(2, 2)}, M(1, 1), {M(0, 2), M(0, 1)}}},
        };
        size_t pair_count = 0;
        for (const PairSeed& seed : pair_seeds)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int c2 = 0; c2 < 2; ++c2)
                    for (const Perm& g : all_perms()) {
                        FixedLine l1 = FixedLine::make(seed.h1.pencil,
                                                       {seed.h1.node, seed.h1.far[static_cast<size_t>(c1)]})
                                           .permuted(g);
                        FixedLine l2 = FixedLine::make(seed.h2.pencil,
                                                       {seed.h2.node, seed.h2.far[static_cast<size_t>(c2)]})
                                           .permuted(g);
                        std::array<std::string, 2> keys = {l1.key_oriented(), l2.key_oriented()};
                        std::sort(keys.begin(), keys.end());
                        if (!seen.insert("pair:" + keys[0] + "&" + keys[1]).second) continue;
                        out.push_back(detail::make_line_pair(l1, l2));
                        ++pair_count;
                    }
        if (pair_count != 60) throw std::logic_error("conic_fixpoints: expected 60 line-pair records");

        // Boundary fixpoints over the six fixed incident point-line flags.
        for (int c = 0; c < 3; ++c)
            for (int a = 0; a < 3; ++a) {
                if (a == c) continue;
                int b = 3 - a - c;
                std::array<QuadMon, 2> pencil = {M(a, a), M(a, b)};
                QuadMon vB = M(b, b), vCA = M(c, a), vCB = M(c, b);
                Character normal_dir = Character::lambda(c) * Character::lambda(a).inverse();
                Character h1_prefactor = Character::lambda(a).inverse() *
                                         (Character::lambda(a) * Character::lambda(b)).inverse() *
                                         Character::lambda(c);
                struct Pairing {
                    QuadMon shared, other1, other2;
                };
                const std::vector<Pairing> pairings = {{vB, vCA, vCB}, {vCA, vB, vCB}, {vCB, vB, vCA}};
                for (const Pairing& pr : pairings) {
                    FixedLine l1 = FixedLine::make(pencil, {pr.shared, pr.other1});
                    FixedLine l2 = FixedLine::make(pencil, {pr.shared, pr.other2});
                    Character h1 = h1_prefactor * pr.shared.character();
                    out.push_back(detail::make_boundary_pair(l1, l2, h1, normal_dir));
                }
                const std::vector<std::array<QuadMon, 2>> flag_lines = {{vCA, vB}, {vB, vCB}, {vCB, vCA}};
                for (const auto& mv : flag_lines) {
                    for (int e = 0; e < 2; ++e) {
                        FixedLine L = FixedLine::make(pencil, {mv[static_cast<size_t>(e)], mv[static_cast<size_t>(1 - e)]});
                        Character h1 = h1_prefactor * mv[static_cast<size_t>(e)].character();
                        out.push_back(detail::make_reducible_cover(L, h1, normal_dir));
                    }
                    FixedLine L = FixedLine::make(pencil, {mv[0], mv[1]});
                    out.push_back(detail::make_irreducible_cover(L, normal_dir));
                }
            }
        if (out.size() != 144) throw std::logic_error("conic_fixpoints: expected 144 records in total");
        return out;
    }();
    return points;
}

// ---------------------------------------------------------------------------
// Splitting of the ambient tangent bundle along each projective class of
// line (types 1..6; types beyond 2 contain a degree -1 summand).
// ---------------------------------------------------------------------------

struct TangentSplitting {
    std::array<int, 6> degrees;
    // character factor of the degree -1 summand (undefined for types 1-2)
    std::optional<Character> negative_part;
};

inline TangentSplitting tangent_splitting_line(int type) {
    if (type < 1 || type > 6) throw std::invalid_argument("tangent_splitting_line: type must be 1..6");
    if (type <= 2) return {{2, 1, 0, 0, 0, 0}, std::nullopt};
    // every line of types 3-6 carries the incident flag p=(1:0:0), l=(x1)
    Character ell = Character::lambda(1);
    Character w = Character::lambda(1) * Character::lambda(2);
    Character vmodp = Character::lambda(0);
    return {{2, 1, 1, 0, 0, -1}, ell.inverse() * w.inverse() * vmodp};
}

}  // namespace nets
