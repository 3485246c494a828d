#include <doctest.h>

#include <map>
#include <nets/geometry.hpp>
#include <set>

using namespace nets;

TEST_CASE("thirteen fixed nets with rank-six tangents") {
    const auto& pts = net_fixpoints();
    REQUIRE(pts.size() == 13);
    long total_rank = 0;
    int isotropy_sum = 0;
    for (const NetFixpoint& fp : pts) {
        CHECK(fp.E.rank() == 3);
        CHECK(fp.F.rank() == 2);
        CHECK(fp.tangent.rank() == 6);
        CHECK(fp.tangent.is_effective());
        CHECK(fp.tangent.multiplicity(Character()) == 0);
        total_rank += fp.tangent.rank();
        isotropy_sum += fp.isotropy_order;
        // first Chern classes of the two bundles agree
        Character ce, cf;
        for (const auto& [c, m] : fp.E.terms())
            for (long i = 0; i < m; ++i) ce = ce * c;
        for (const auto& [c, m] : fp.F.terms())
            for (long i = 0; i < m; ++i) cf = cf * c;
        CHECK(ce == cf);
    }
    CHECK(total_rank == 78);
}

TEST_CASE("fixed nets close up under coordinate permutations") {
    for (const NetFixpoint& fp : net_fixpoints())
        for (const Perm& g : all_perms()) {
            const NetFixpoint& img = net_fixpoint_at(permuted_net(fp.net, g));
            CHECK(img.E == fp.E.permuted(g));
            CHECK(img.F == fp.F.permuted(g));
            CHECK(img.tangent == fp.tangent.permuted(g));
        }
}

TEST_CASE("twenty-seven fixed lines with consistent elementary data") {
    const auto& lines = fixed_lines();
    REQUIRE(lines.size() == 27);
    for (const FixedLine& L : lines) {
        CHECK(L.point_forms.rank() == 2);
        // the net at each end reassembles from the elementary pieces
        for (int e = 0; e < 2; ++e) {
            VirtualRep expect = L.point_forms * VirtualRep(L.ell) + VirtualRep(L.taut_fiber(e)).dual();
            VirtualRep net_rep;
            for (const QuadMon& m : L.net_at(e)) net_rep.add(m.character(), 1);
            CHECK(net_rep == expect);
        }
        CHECK(L.h0_tangent_ambient().rank() == 9);
        CHECK(L.h0_tangent_line().rank() == 3);
        CHECK(L.moduli_tangent().rank() == 6);
        CHECK(L.h0_Op().rank() == 2);
        CHECK(L.h0_O2p().rank() == 3);
        CHECK(L.h0_Fv().rank() == 3);
        CHECK(L.h0_S2Fv().rank() == 6);
        // fiber of O(p) at each end matches the net fixpoint data
        for (int e = 0; e < 2; ++e) {
            const NetFixpoint& y = net_fixpoint_at(L.net_at(e));
            Character expected = L.wedge_pf.inverse() * L.ell.pow(Rational(-2)) * L.taut_fiber(e);
            CHECK(y.point_class == expected);
        }
    }
}

TEST_CASE("elementary data of the seed lines") {
    Perm id = {0, 1, 2};
    auto lam = [](int i) { return Character::lambda(i); };

    FixedLine t3 = fixed_line_seed(3, id);
    CHECK(t3.ell == lam(1));
    VirtualRep expect_p = VirtualRep(lam(1)) + VirtualRep(lam(2));
    CHECK(t3.point_forms == expect_p);
    CHECK(t3.taut_fiber(0) == (lam(0) * lam(1)).inverse());
    CHECK(t3.taut_fiber(1) == lam(2).pow(Rational(-2)));

    FixedLine t1 = fixed_line_seed(1, id);
    CHECK(t1.ell == lam(0));
    CHECK(t1.taut_fiber(0) == lam(1).pow(Rational(-2)));
    CHECK(t1.taut_fiber(1) == lam(2).pow(Rational(-2)));
}

TEST_CASE("first-row net fixpoint products") {
    // the rank-3 and rank-2 bundles at the triangle net multiply to a
    // six-term representation
    const NetFixpoint& fp = net_fixpoint_at(
        make_net(QuadMon::make(1, 2), QuadMon::make(0, 1), QuadMon::make(0, 2)));
    VirtualRep prod = fp.E * fp.F.dual();
    CHECK(prod.rank() == 6);
    CHECK(prod.terms().size() == 3);
    for (const auto& [c, m] : prod.terms()) CHECK(m == 2);
    CHECK(prod.multiplicity(Character::lambda(0).inverse()) == 2);
}

TEST_CASE("cotangent weight at the first marking") {
    WeightVector w = {0, 1, 17};
    for (const MarkedLineFixpoint& p : marked_line_fixpoints()) {
        if (p.contracted) {
            CHECK(p.psi.weight(w) == Rational(0));
        } else {
            // psi is minus the tangent weight of the line at the marking
            const FixedLine& L = *p.line;
            int e = p.target1->net == L.net_at(0) ? 0 : 1;
            CHECK(p.psi.weight(w) == -L.tangent_char_at(e).weight(w));
        }
    }
}

TEST_CASE("fixed lines by type and the five seed families") {
    std::set<std::string> keys;
    int orbit_sizes[6] = {};
    for (int type = 1; type <= 5; ++type) {
        std::set<std::string> orbit;
        for (const Perm& g : all_perms()) orbit.insert(fixed_line_seed(type, g).key_unoriented());
        orbit_sizes[type] = static_cast<int>(orbit.size());
        keys.insert(orbit.begin(), orbit.end());
    }
    CHECK(orbit_sizes[1] == 3);
    CHECK(orbit_sizes[2] == 6);
    CHECK(orbit_sizes[3] == 6);
    CHECK(orbit_sizes[4] == 6);
    CHECK(orbit_sizes[5] == 6);
    CHECK(keys.size() == 27);
}

TEST_CASE("two-marked line fixpoints") {
    const auto& pts = marked_line_fixpoints();
    REQUIRE(pts.size() == 108);
    int contracted = 0;
    for (const MarkedLineFixpoint& p : pts) {
        CHECK(p.tangent.rank() == 8);
        CHECK(p.tangent.is_effective());
        if (p.contracted) {
            ++contracted;
            CHECK(p.psi.is_trivial());
            CHECK(p.target1 == p.target2);
        } else {
            CHECK(!p.psi.is_trivial());
        }
    }
    CHECK(contracted == 54);
}

TEST_CASE("conic fixpoint list") {
    const auto& pts = conic_fixpoints();
    REQUIRE(pts.size() == 144);
    std::map<ConicFixpoint::Kind, int> counts;
    for (const ConicFixpoint& p : pts) {
        counts[p.kind]++;
        CHECK(p.tangent.rank() == 9);
        CHECK(p.h0_Op.rank() == 3);
        CHECK(p.h0_O2p.rank() == 5);
        CHECK(p.h0_Fv.rank() == 4);
        CHECK(p.h0_S2Fv.rank() == 9);
        bool is_cover = p.kind == ConicFixpoint::Kind::CoverIrreducible ||
                        p.kind == ConicFixpoint::Kind::CoverReducible;
        CHECK(p.aut == (is_cover ? 2 : 1));
        CHECK(p.h0_Op.is_effective());
        CHECK(p.h0_O2p.is_effective());
        CHECK(p.h0_Fv.is_effective());
        CHECK(p.h0_S2Fv.is_effective());
        CHECK(p.tangent.is_effective());
    }
    CHECK(counts[ConicFixpoint::Kind::Smooth] == 12);
    CHECK(counts[ConicFixpoint::Kind::LinePair] == 60);
    CHECK(counts[ConicFixpoint::Kind::BoundaryPair] == 18);
    CHECK(counts[ConicFixpoint::Kind::CoverReducible] == 36);
    CHECK(counts[ConicFixpoint::Kind::CoverIrreducible] == 18);
}

TEST_CASE("tangent splittings along the six line classes") {
    for (int type = 1; type <= 6; ++type) {
        TangentSplitting s = tangent_splitting_line(type);
        int sum = 0;
        for (int d : s.degrees) sum += d;
        CHECK(sum == 3);  // degree of c1 of the tangent bundle on a line
        if (type <= 2) {
            CHECK(s.degrees == std::array<int, 6>{2, 1, 0, 0, 0, 0});
            CHECK(!s.negative_part.has_value());
        } else {
            CHECK(s.degrees == std::array<int, 6>{2, 1, 1, 0, 0, -1});
            REQUIRE(s.negative_part.has_value());
            CHECK(*s.negative_part ==
                  Character::lambda(1).inverse() * (Character::lambda(1) * Character::lambda(2)).inverse() *
                      Character::lambda(0));
        }
    }
}
