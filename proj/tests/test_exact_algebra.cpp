#include <doctest.h>

#include <nets/poly.hpp>
#include <nets/qseries.hpp>
#include <nets/ratfun.hpp>
#include <nets/rational.hpp>

using namespace nets;

namespace {

// deterministic little generator for property tests
struct Lcg {
    unsigned long state;
    explicit Lcg(unsigned long seed) : state(seed) {}
    long next(long lo, long hi) {
        state = state * 6364136223846793005UL + 1442695040888963407UL;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
};

QSeries random_series(Lcg& rng, int order, bool unit_linear) {
    QSeries s(order);
    for (int n = unit_linear ? 2 : 0; n <= order; ++n)
        s.set_coeff(n, Rational(rng.next(-5, 5), rng.next(1, 4)));
    if (unit_linear) {
        s.set_coeff(0, Rational(0));
        s.set_coeff(1, Rational(1));
    }
    return s;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(1, -2).to_string() == "-1/2");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational::from_string("-65/19") == Rational(-65, 19));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(binomial(5, 2) == Rational(10));
}

TEST_CASE("series product") {
    QSeries one_plus = QSeries::one(4) + QSeries::q(4);
    QSeries one_minus = QSeries::one(4) - QSeries::q(4);
    QSeries prod = one_plus * one_minus;
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(0));
    CHECK(prod.coeff(2) == Rational(-1));

    QSeries a(3, {Rational(1), Rational(3)});
    CHECK(a * QSeries::one(3) == a.truncated(3));
}

TEST_CASE("series inverse by long division") {
    QSeries psi(8);
    psi.set_coeff(0, Rational(1));
    psi.set_coeff(1, Rational(3));
    psi.set_coeff(2, Rational(-7, 2));
    psi.set_coeff(5, Rational(11, 3));
    QSeries prod = psi * psi.inverse();
    CHECK(prod == QSeries::one(8));
}

TEST_CASE("series exp and log") {
    CHECK(QSeries(6).exp() == QSeries::one(6));

    QSeries log1q = (QSeries::one(6) + QSeries::q(6)).log();
    for (int n = 1; n <= 6; ++n) {
        Rational expect = Rational(n % 2 == 1 ? 1 : -1, n);
        CHECK(log1q.coeff(n) == expect);
    }

    QSeries f(7);
    f.set_coeff(0, Rational(1));
    f.set_coeff(1, Rational(5));
    f.set_coeff(2, Rational(7));
    CHECK(f.log().exp() == f);
}

TEST_CASE("series reversion") {
    CHECK(QSeries::q(6).reversion() == QSeries::q(6));

    // q + q^2 reverses to the signed Catalan series
    QSeries u = QSeries::q(8);
    u.set_coeff(2, Rational(1));
    QSeries v = u.reversion();
    const long signed_catalan[] = {1, -1, 2, -5, 14, -42, 132};
    for (int n = 1; n <= 7; ++n) CHECK(v.coeff(n) == Rational(signed_catalan[n - 1]));
    CHECK(u.compose(v) == QSeries::q(8));
}

TEST_CASE("series domain errors") {
    QSeries unit = QSeries::one(4) + QSeries::q(4);
    CHECK_THROWS_AS(unit.exp(), std::domain_error);             // nonzero constant term
    CHECK_THROWS_AS(QSeries::q(4).log(), std::domain_error);    // constant term not one
    CHECK_THROWS_AS(unit.reversion(), std::domain_error);       // nonzero constant term
    QSeries no_linear(4);
    no_linear.set_coeff(2, Rational(1));
    CHECK_THROWS_AS(no_linear.reversion(), std::domain_error);  // zero linear coefficient
    CHECK_THROWS_AS(QSeries(3).inverse(), std::domain_error);
}

TEST_CASE("series ring axioms on random data") {
    Lcg rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        QSeries a = random_series(rng, 7, false);
        QSeries b = random_series(rng, 7, false);
        QSeries c = random_series(rng, 7, false);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("reversion round trip on random series") {
    Lcg rng(97);
    for (int trial = 0; trial < 100; ++trial) {
        QSeries u = random_series(rng, 9, true);
        QSeries v = u.reversion();
        CHECK(u.compose(v) == QSeries::q(9));
        CHECK(v.compose(u) == QSeries::q(9));
    }
}

TEST_CASE("poly gcd and division") {
    Poly x = Poly::x();
    Poly a = (x + Poly(1)) * (x - Poly(2)) * (x - Poly(2));
    Poly b = (x - Poly(2)) * (x + Poly(3));
    Poly g = Poly::gcd(a, b);
    CHECK(g == (x - Poly(2)).primitive());
    CHECK((a * b) / b == a);
}

TEST_CASE("nullspace simple dependences") {
    auto row = [](std::initializer_list<Poly> ps) {
        std::vector<RatFun> r;
        for (const Poly& p : ps) r.emplace_back(p);
        return r;
    };
    Poly x = Poly::x();

    SUBCASE("unit rows") {
        std::vector<std::vector<RatFun>> rows = {row({Poly(1), Poly(0)}), row({Poly(0), Poly(1)}),
                                                 row({Poly(1), Poly(1)})};
        auto dep = ratfun_nullspace(rows);
        REQUIRE(dep.has_value());
        CHECK(dep->first == 2);
        // normalized so the highest-order entry has positive leading coefficient
        CHECK(dep->second == std::vector<Poly>{Poly(-1), Poly(-1), Poly(1)});
    }

    SUBCASE("proportional rows") {
        std::vector<std::vector<RatFun>> rows = {row({Poly(1), x}), row({x, x * x})};
        auto dep = ratfun_nullspace(rows);
        REQUIRE(dep.has_value());
        CHECK(dep->first == 1);
        CHECK(dep->second == std::vector<Poly>{-x, Poly(1)});
    }

    SUBCASE("no dependence reported when rows are independent") {
        std::vector<std::vector<RatFun>> rows = {row({Poly(1), Poly(0)}), row({Poly(0), Poly(1)})};
        CHECK(!ratfun_nullspace(rows).has_value());
    }
}

TEST_CASE("nullspace output invariant under common row scaling") {
    Poly x = Poly::x();
    std::vector<std::vector<RatFun>> rows = {
        {RatFun(Poly(1)), RatFun(x), RatFun(x * x)},
        {RatFun(x), RatFun(Poly(2)), RatFun(Poly(1))},
        {RatFun(x + Poly(1)), RatFun(x + Poly(2)), RatFun(x * x + Poly(1))},
        {RatFun(Poly(3) * x), RatFun(x * x), RatFun(Poly(5))},
        {RatFun(Poly(1)), RatFun(Poly(1)), RatFun(Poly(1))},
    };
    auto base = ratfun_nullspace(rows);
    REQUIRE(base.has_value());

    Poly s = (x + Poly(3)) * Poly(7);
    std::vector<std::vector<RatFun>> scaled = rows;
    for (auto& r : scaled)
        for (auto& e : r) e = e * RatFun(s);
    auto again = ratfun_nullspace(scaled);
    REQUIRE(again.has_value());
    CHECK(base->first == again->first);
    CHECK(base->second == again->second);
}
