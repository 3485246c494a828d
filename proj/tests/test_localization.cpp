#include <doctest.h>

#include <nets/counts.hpp>
#include <nets/records.hpp>

using namespace nets;

TEST_CASE("weight validation") {
    CHECK(validate_weights(net_records(), {0, 1, 17}));
    CHECK(!validate_weights(net_records(), {1, 1, 1}));
    CHECK(!validate_weights(net_records(), {0, 0, 0}));
    CHECK(!validate_weights(marked_line_records(), {1, 1, 1}));

    auto bad = find_degenerate_weight(net_records(), {1, 1, 1});
    REQUIRE(bad.has_value());
    CHECK(!bad->empty());
}

TEST_CASE("default weight search returns a valid vector") {
    WeightVector w = default_weights();
    CHECK(validate_weights(net_records(), w));
    CHECK(validate_weights(marked_line_records(), w));
    CHECK(validate_weights(conic_records(), w));
    CHECK(!weight_degeneracy_report(w).has_value());
    // a different seed still returns a valid vector
    WeightVector w2 = default_weights(7);
    CHECK(!weight_degeneracy_report(w2).has_value());
}

TEST_CASE("residue sums over the net variety") {
    WeightVector w = default_weights();

    SUBCASE("top self-intersection of the ample class") {
        IntegrandSpec spec{6, [](const LocalWeights& lw) { return lw.chern("Ev", 1).pow(6); }};
        CHECK(bott_integral(net_records(), spec, w) == Rational(57));
    }

    SUBCASE("classes below the top degree integrate to zero") {
        IntegrandSpec spec{5, [](const LocalWeights& lw) { return lw.chern("Ev", 1).pow(5); }};
        CHECK(bott_integral(net_records(), spec, w) == Rational(0));
    }

    SUBCASE("Euler number equals the number of fixpoints") {
        CHECK(euler_number_bott(w) == Rational(13));
    }
}

TEST_CASE("residue sums are independent of the weight choice") {
    std::vector<WeightVector> ws = {{0, 1, 17}, {1, 5, -7}, {-3, 11, 2}};
    for (const auto& w : ws) REQUIRE(validate_weights(net_records(), w));
    IntegrandSpec spec{6, [](const LocalWeights& lw) {
                           return lw.chern("Ev", 1).pow(2) * lw.chern("Ev", 2) * lw.chern("F", 2);
                       }};
    Rational first = bott_integral(net_records(), spec, ws[0]);
    for (size_t i = 1; i < ws.size(); ++i) CHECK(bott_integral(net_records(), spec, ws[i]) == first);
    CHECK(first == Rational(9));
}

TEST_CASE("degree sieve over the larger moduli") {
    WeightVector w = default_weights();
    // degree six < dimension eight over the two-marked lines
    IntegrandSpec low_m02{6, [](const LocalWeights& lw) {
                              return lw.chern("E1v", 1).pow(2) * lw.chern("E2v", 1).pow(4);
                          }};
    CHECK(bott_integral(marked_line_records(), low_m02, w) == Rational(0));
    // degree six < dimension nine over the conic fixpoints
    IntegrandSpec low_m11{6, [](const LocalWeights& lw) {
                              Rational c3 = lw.chern("Op", 3);
                              return c3 * c3;
                          }};
    CHECK(bott_integral(conic_records(), low_m11, w) == Rational(0));
}

TEST_CASE("degenerate weights throw with the offending fixpoint") {
    IntegrandSpec spec{6, [](const LocalWeights& lw) { return lw.chern("Ev", 1).pow(6); }};
    CHECK_THROWS_AS(bott_integral(net_records(), spec, {1, 1, 1}), WeightDegeneracy);
}
