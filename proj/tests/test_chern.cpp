#include <doctest.h>

#include <nets/chern.hpp>
#include <nets/counts.hpp>
#include <nets/mpoly.hpp>

using namespace nets;

namespace {

/// Test ring with two free generators of degrees 1 and 2, high enough
/// nilpotency bounds to behave like a polynomial ring in low degrees.
struct FormalRing {
    GradedRing ring{{{"c1", 1, 8}, {"c2", 2, 8}}, 24};
    ChowClass c1 = ring.generator(0);
    ChowClass c2 = ring.generator(1);
};

}  // namespace

TEST_CASE("dual of a rank-2 bundle flips the odd class") {
    FormalRing F;
    TotalChernClass a{2, F.ring.one() + F.c1 + F.c2};
    TotalChernClass d = dual_bundle(a);
    CHECK(d.total == F.ring.one() - F.c1 + F.c2);
}

TEST_CASE("symmetric square of a rank-2 bundle") {
    FormalRing F;
    TotalChernClass a{2, F.ring.one() + F.c1 + F.c2};
    TotalChernClass s = sym2_bundle(a);
    CHECK(s.rank == 3);
    ChowClass expect = F.ring.one() + F.c1 * Rational(3) + F.c1 * F.c1 * Rational(2) + F.c2 * Rational(4) +
                       F.c1 * F.c2 * Rational(4);
    CHECK(s.total == expect);
}

TEST_CASE("tensor by a line bundle in rank one") {
    GradedRing ring{{{"m", 1, 4}, {"l", 1, 4}}, 8};
    ChowClass m = ring.generator(0), l = ring.generator(1);
    TotalChernClass a{1, ring.one() + m};
    TotalChernClass t = tensor_line(a, l);
    CHECK(t.total == ring.one() + m + l);
}

TEST_CASE("functors agree with splittings into line bundles") {
    GradedRing ring{{{"a", 1, 6}, {"b", 1, 6}}, 12};
    ChowClass a = ring.generator(0), b = ring.generator(1);
    TotalChernClass sum = whitney_sum(total_of_line(a), total_of_line(b));

    SUBCASE("symmetric square") {
        TotalChernClass s = sym2_bundle(sum);
        ChowClass split = (ring.one() + a + a) * (ring.one() + a + b) * (ring.one() + b + b);
        CHECK(s.total == split);
    }
    SUBCASE("fourth symmetric power") {
        TotalChernClass s = sym_rank2_bundle(sum, 4);
        CHECK(s.rank == 5);
        ChowClass split = ring.one();
        for (int i = 0; i <= 4; ++i) {
            ChowClass root = ring.zero();
            for (int k = 0; k < 4 - i; ++k) root += a;
            for (int k = 0; k < i; ++k) root += b;
            split = split * (ring.one() + root);
        }
        CHECK(s.total == split);
    }
    SUBCASE("exterior square") {
        TotalChernClass w = wedge2_bundle(sum);
        CHECK(w.rank == 1);
        CHECK(w.total == ring.one() + a + b);
    }
    SUBCASE("rank-3 exterior and symmetric squares") {
        GradedRing r3{{{"a", 1, 4}, {"b", 1, 4}, {"c", 1, 4}}, 12};
        ChowClass x = r3.generator(0), y = r3.generator(1), z = r3.generator(2);
        TotalChernClass s3 = whitney_sum(whitney_sum(total_of_line(x), total_of_line(y)), total_of_line(z));
        TotalChernClass w2 = wedge2_bundle(s3);
        CHECK(w2.total == (r3.one() + x + y) * (r3.one() + x + z) * (r3.one() + y + z));
        TotalChernClass s2 = sym2_bundle(s3);
        ChowClass split = (r3.one() + x + x) * (r3.one() + y + y) * (r3.one() + z + z) *
                          (r3.one() + x + y) * (r3.one() + x + z) * (r3.one() + y + z);
        CHECK(s2.total == split);
    }
}

TEST_CASE("reduction in a projective-bundle ring") {
    const LineModuliRing& d = line_moduli_ring();
    const GradedRing& R = *d.ring;

    SUBCASE("nilpotency of the base generators") {
        CHECK((d.tau * d.tau * d.tau).is_zero());
        CHECK((d.tau_check.pow(3)).is_zero());
    }
    SUBCASE("one is a unit") {
        ChowClass a = d.tau * d.tau_check + d.sigma;
        CHECK(R.one() * a == a);
    }
    SUBCASE("fiber-class relation") {
        ChowClass lhs = d.sigma.pow(3);
        ChowClass rhs = d.cV.component(1) * d.sigma.pow(2) - d.cV.component(2) * d.sigma + d.cV.component(3);
        CHECK(lhs == rhs);
    }
    SUBCASE("integration is zero off the top degree") {
        CHECK(R.integrate(d.sigma.pow(2) * d.tau.pow(2)) == Rational(0));
        CHECK(R.integrate(d.sigma.pow(2) * d.tau.pow(2) * d.tau_check.pow(2)) == Rational(1));
    }
}

TEST_CASE("basis ring of the net variety") {
    const NetChowRing& R = net_chow_ring();

    SUBCASE("pairing matrix is symmetric and invertible") {
        Matrix g(NetChowRing::dim, std::vector<Rational>(NetChowRing::dim));
        for (int a = 0; a < NetChowRing::dim; ++a)
            for (int b = 0; b < NetChowRing::dim; ++b) {
                g[static_cast<size_t>(a)][static_cast<size_t>(b)] = R.pairing(a, b);
                CHECK(R.pairing(a, b) == R.pairing(b, a));
            }
        CHECK(determinant(g) != Rational(0));
    }
    SUBCASE("normalized pairings") {
        CHECK(R.pairing(0, 12) == Rational(1));
        CHECK(R.pairing(1, 11) == Rational(1));
    }
    SUBCASE("integration table entries") {
        CHECK(integrate_net_monomial({6, 0, 0, 0}) == Rational(57));
        CHECK(integrate_net_monomial({0, 0, 0, 3}) == Rational(2));
        CHECK(integrate_net_monomial({3, 0, 1, 0}) == Rational(5));
        CHECK(integrate_net_monomial({5, 0, 0, 0}) == Rational(0));  // degree five
    }
    SUBCASE("integration of coordinate vectors") {
        std::vector<Rational> t12(NetChowRing::dim), t1(NetChowRing::dim), t11(NetChowRing::dim);
        t12[12] = Rational(1);
        t1[1] = Rational(1);
        t11[11] = Rational(1);
        CHECK(R.integrate(t12) == Rational(1));
        CHECK(R.integrate(R.multiply(t1, t11)) == Rational(1));
        CHECK(R.integrate(t1) == Rational(0));  // below the top degree
    }
    SUBCASE("products through duality") {
        // the ample class multiplies basis classes into basis classes
        const auto& p_t8 = R.basis_product(1, 8);
        CHECK(p_t8[11] == Rational(57));
        const auto& p_t1 = R.basis_product(1, 1);
        CHECK(p_t1[2] == Rational(1));
        // commutativity and a three-factor associativity spot check
        for (int a : {2, 5, 7})
            for (int b : {3, 4, 8}) CHECK(R.basis_product(a, b) == R.basis_product(b, a));
        std::vector<Rational> e2(NetChowRing::dim), e3(NetChowRing::dim), e4(NetChowRing::dim);
        e2[2] = Rational(1);
        e3[3] = Rational(1);
        e4[4] = Rational(1);
        CHECK(R.multiply(R.multiply(e2, e3), e4) == R.multiply(e2, R.multiply(e3, e4)));
    }
}

TEST_CASE("quotient-presentation relations against the integration table") {
    // Coordinates of the presentation ideal generators on the standard
    // module basis over the symmetric functions, reduced with the
    // triangular rewriting rules; every coordinate must pair to zero with
    // every complementary monomial.
    constexpr size_t E1 = 0, E2 = 1, E3 = 2, F1 = 3, F2 = 4;
    constexpr size_t G1 = 5, G2 = 6, G3 = 7, D1 = 8, D2 = 9;
    constexpr size_t NV = 10;
    auto V = [](size_t i) { return MPoly::var(NV, i); };

    auto reduce = [&](MPoly p) {
        p = p.substituted(F2, V(D1) - V(F1));
        p = p.substituted(E3, V(G1) - V(E1) - V(E2));
        MPoly rule_f1 = V(D1) * V(F1) - V(D2);
        MPoly rule_e2 = (V(G1) - V(E1)) * V(E2) - (V(G2) - V(G1) * V(E1) + V(E1) * V(E1));
        MPoly rule_e1 = V(G1) * V(E1) * V(E1) - V(G2) * V(E1) + V(G3);
        for (int pass = 0; pass < 32; ++pass) {
            bool busy = p.max_exponent(F1) >= 2 || p.max_exponent(E2) >= 2 || p.max_exponent(E1) >= 3;
            if (!busy) break;
            p = p.reduced_by_power_rule(F1, 2, rule_f1);
            p = p.reduced_by_power_rule(E2, 2, rule_e2);
            p = p.reduced_by_power_rule(E1, 3, rule_e1);
        }
        return p;
    };

    // collect the coordinates with respect to the basis e1^i e2^j f1^k
    auto coordinates = [&](const MPoly& reduced) {
        std::map<std::array<int, 3>, std::vector<std::pair<NetMonomial, Rational>>> coords;
        for (const auto& [mono, coeff] : reduced.terms()) {
            std::array<int, 3> key = {mono[E1], mono[E2], mono[F1]};
            REQUIRE(key[0] <= 2);
            REQUIRE(key[1] <= 1);
            REQUIRE(key[2] <= 1);
            // the two first Chern classes are identified in the quotient
            NetMonomial nm{mono[G1] + mono[D1], mono[G2], mono[G3], mono[D2]};
            coords[key].emplace_back(nm, coeff);
        }
        return coords;
    };

    MPoly r0 = V(E1) + V(E2) + V(E3) - V(F1) - V(F2);
    MPoly q1 = V(E1) - V(F1);
    MPoly q2 = V(E1) - V(F2);
    MPoly q3 = V(E2) - V(F2);
    MPoly r1 = q1 * q1 * q1 * q2 * q2 * q2;
    MPoly r2 = q2 * q2 * q2 * q3 * q3 * q3;

    for (const MPoly* rel : {&r0, &r1, &r2}) {
        auto coords = coordinates(reduce(*rel));
        CHECK(!coords.empty());
        for (const auto& [key, poly] : coords) {
            int deg = poly.front().first.degree();
            for (const auto& [nm, c] : poly) REQUIRE(nm.degree() == deg);
            if (deg > 6) continue;
            for (int i = 0; i <= 6; ++i)
                for (int j = 0; j <= 3; ++j)
                    for (int k = 0; k <= 2; ++k)
                        for (int l = 0; l <= 3; ++l) {
                            NetMonomial comp{i, j, k, l};
                            if (comp.degree() != 6 - deg) continue;
                            Rational total(0);
                            for (const auto& [nm, c] : poly) total += c * integrate_net_monomial(nm * comp);
                            CHECK(total == Rational(0));
                        }
        }
    }
}
