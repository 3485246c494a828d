#include <doctest.h>

#include <nets/counts.hpp>

using namespace nets;

TEST_CASE("the fourteen degree-six monomial integrals") {
    WeightVector w = default_weights();
    auto values = monomial_values_bott(w);
    REQUIRE(values.size() == 14);
    for (const auto& [m, v] : values) {
        CHECK(v == integrate_net_monomial(m));
        CHECK(v.is_integer());
    }
}

TEST_CASE("verified ring accessor runs the localization gate") {
    WeightVector w = default_weights();
    const NetChowRing& R = verified_net_chow_ring(w);
    CHECK(R.pairing(0, 12) == Rational(1));
}

TEST_CASE("virtual numbers of lines on the three sections") {
    auto counts = line_counts();
    CHECK(counts[0] == Rational(147));
    CHECK(counts[1] == Rational(216));
    CHECK(counts[2] == Rational(144));
}

TEST_CASE("rank bookkeeping in the line-moduli ring") {
    const LineModuliRing& d = line_moduli_ring();
    // the defining rank-3 bundle on a fourfold base has vanishing c4
    ChowClass total = d.cV.total;
    CHECK(total.component(4).is_zero());
    // the rank-2 pushforward has no classes above its rank
    ChowClass k3 = d.pushed.total.component(3);
    CHECK(k3.is_zero());
}

TEST_CASE("line counts again by residues over the fixed lines") {
    // independent route: the same three integrals as a fixed-point sum
    // over the 27 fixed lines instead of the bundle Chow ring
    std::vector<FixpointRecord> recs;
    for (const FixedLine& L : fixed_lines()) {
        FixpointRecord r;
        r.id = L.key_oriented();
        r.tangent = L.moduli_tangent();
        r.bundles["Op"] = L.h0_Op();
        r.bundles["O2p"] = L.h0_O2p();
        r.bundles["Fv"] = L.h0_Fv();
        r.bundles["S2Fv"] = L.h0_S2Fv();
        recs.push_back(std::move(r));
    }
    WeightVector w = default_weights();
    REQUIRE(validate_weights(recs, w));
    IntegrandSpec on_x{6, [](const LocalWeights& lw) {
                           Rational c = lw.chern("Op", 2);
                           return c * c * c;
                       }};
    IntegrandSpec on_y{6, [](const LocalWeights& lw) { return lw.chern("Fv", 3) * lw.chern("O2p", 3); }};
    IntegrandSpec on_z{6, [](const LocalWeights& lw) { return lw.chern("S2Fv", 6); }};
    auto ring_route = line_counts();
    CHECK(bott_integral(recs, on_x, w) == ring_route[0]);
    CHECK(bott_integral(recs, on_y, w) == ring_route[1]);
    CHECK(bott_integral(recs, on_z, w) == ring_route[2]);
}

TEST_CASE("virtual numbers of plane conics on the three sections") {
    auto counts = conic02_counts();
    CHECK(counts[0] == Rational(0));
    CHECK(counts[1] == Rational(0));
    CHECK(counts[2] == Rational(36));
}

TEST_CASE("plane-conic ring sanity") {
    const PlaneConicRing& d = plane_conic_ring();
    CHECK(d.cV.total.component(4).is_zero());
    // rank-5 pushforward: degree-6 component of the formal quotient dies
    ChowClass m6 = (sym2_bundle(d.cVdual).total * ((*d.ring).one() - d.xi).unit_inverse()).component(6);
    CHECK(m6.is_zero());
    // integration normalization
    CHECK(d.ring->integrate(d.tau.pow(2) * d.tau_check.pow(2) * d.xi.pow(5)) == Rational(1));
}
