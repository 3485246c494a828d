#include <doctest.h>

#include <nets/rep_ring.hpp>

using namespace nets;

namespace {
Character lam(int i) { return Character::lambda(i); }
}

TEST_CASE("character products and inverses") {
    VirtualRep v = VirtualRep(lam(0)) * VirtualRep(lam(0).inverse());
    CHECK(v == VirtualRep::one());

    VirtualRep sum = VirtualRep(lam(0)) + VirtualRep(lam(1));
    VirtualRep prod = sum * VirtualRep(lam(2));
    CHECK(prod.multiplicity(lam(0) * lam(2)) == 1);
    CHECK(prod.multiplicity(lam(1) * lam(2)) == 1);
    CHECK(prod.rank() == 2);
}

TEST_CASE("fractional powers of characters") {
    VirtualRep sq(lam(0).pow(Rational(2)));
    CHECK(sq.power_k(Rational(1, 2)) == VirtualRep(lam(0)));
    VirtualRep u = VirtualRep(lam(0)) + VirtualRep(lam(1).pow(Rational(2)));
    CHECK(u.power_k(Rational(1)) == u);
    VirtualRep inv = u.power_k(Rational(-1));
    CHECK(inv.multiplicity(lam(0).inverse()) == 1);
    CHECK(inv.multiplicity(lam(1).pow(Rational(-2))) == 1);
}

TEST_CASE("power composition") {
    VirtualRep u = VirtualRep(lam(0)) + VirtualRep(lam(1) * lam(2).inverse()) * 2;
    Rational a(2, 3), b(-3, 4);
    CHECK(u.power_k(a).power_k(b) == u.power_k(a * b));
}

TEST_CASE("symmetric and exterior powers") {
    VirtualRep two = VirtualRep(lam(0)) + VirtualRep(lam(1));
    VirtualRep s2 = two.sym(2);
    CHECK(s2.rank() == 3);
    CHECK(s2.multiplicity(lam(0).pow(Rational(2))) == 1);
    CHECK(s2.multiplicity(lam(0) * lam(1)) == 1);
    CHECK(s2.multiplicity(lam(1).pow(Rational(2))) == 1);

    VirtualRep three = two + VirtualRep(lam(2));
    VirtualRep w2 = three.wedge2();
    CHECK(w2.rank() == 3);
    CHECK(w2.multiplicity(lam(0) * lam(1)) == 1);
    CHECK(w2.multiplicity(lam(0) * lam(2)) == 1);
    CHECK(w2.multiplicity(lam(1) * lam(2)) == 1);

    CHECK(two.sym(4).rank() == 5);

    VirtualRep virt = VirtualRep(lam(0)) - VirtualRep(lam(1));
    CHECK_THROWS_AS(virt.sym(2), std::domain_error);
    CHECK_THROWS_AS(virt.wedge2(), std::domain_error);
}

TEST_CASE("rank identities") {
    VirtualRep u = VirtualRep(lam(0)) + VirtualRep(lam(1)) * 2;
    VirtualRep v = VirtualRep(lam(2)) + VirtualRep(lam(0) * lam(1));
    CHECK((u * v).rank() == u.rank() * v.rank());
    CHECK(u.sym(3).rank() == 10);  // C(3+3-1, 3)
    CHECK(u.wedge2().rank() == 3);
}

TEST_CASE("weights under a one-parameter subgroup") {
    WeightVector w = {1, 2, 3};
    CHECK((lam(0) * lam(1).inverse()).weight(w) == Rational(-1));
    CHECK(Character().weight(w) == Rational(0));

    VirtualRep u = VirtualRep(lam(0)) + VirtualRep(lam(1)) - VirtualRep(lam(2));
    auto ws = u.weights(w);
    long total = 0;
    for (const auto& [wt, m] : ws) total += m;
    CHECK(total == 1);
}

TEST_CASE("dual pairing of weight products") {
    WeightVector w = {3, -1, 7};
    VirtualRep u = VirtualRep(lam(0)) + VirtualRep(lam(1) * lam(2)) + VirtualRep(lam(2).pow(Rational(2)));
    Rational found(1), dual_found(1);
    for (const Rational& x : u.effective_weights(w)) found *= x;
    for (const Rational& x : u.dual().effective_weights(w)) dual_found *= x;
    CHECK(dual_found == found * Rational(-1).pow(u.rank()));
}

TEST_CASE("debug serialization is sorted and stable") {
    // lexicographic on exponent triples: (0,0,1) sorts before (1,0,0)
    VirtualRep u = VirtualRep(lam(2)) + VirtualRep(lam(0)) * 2;
    CHECK(u.to_string() == "(L2) + 2*(L0)");
}
