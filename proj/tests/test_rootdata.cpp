#include "cqg/rootdata.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace cqg;

TEST_CASE("basic data of small root systems") {
    auto a1 = RootDatum::from_series("A1");
    CHECK(a1.L() == 2);
    CHECK(a1.pairing(a1.fundamental(0), a1.fundamental(0)) == Rational(1, 2));
    auto a2 = RootDatum::from_series("A2");
    CHECK(a2.L() == 3);
    CHECK(a2.positive_roots().size() == 3);
    CHECK(a2.pairing(a2.fundamental(0), a2.fundamental(0)) == Rational(2, 3));
    CHECK(a2.pairing(a2.fundamental(0), a2.fundamental(1)) == Rational(1, 3));
    CHECK(a2.rho() == Weight{1, 1});
    auto g2 = RootDatum::from_series("G2");
    CHECK(g2.positive_roots().size() == 6);
}

TEST_CASE("Weyl group orders and longest elements") {
    const std::vector<std::pair<std::string, std::size_t>> cases{
        {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"C3", 48}, {"G2", 12}, {"D4", 192}, {"F4", 1152}};
    for (const auto& [label, order] : cases) {
        CAPTURE(label);
        auto rd = RootDatum::from_series(label);
        CHECK(rd.weyl_group().size() == order);
        CHECK(rd.longest_element().length == static_cast<int>(rd.positive_roots().size()));
        // w₀ ρ = −ρ
        CHECK(rd.act(rd.longest_element(), rd.rho()) == -rd.rho());
        // Σ sign(w) = 0
        int total = 0;
        for (const auto& w : rd.weyl_group()) total += w.sign();
        CHECK(total == 0);
    }
}

TEST_CASE("Weyl group is closed under composition and preserves the form") {
    for (const char* label : {"A2", "B2", "G2"}) {
        auto rd = RootDatum::from_series(label);
        const auto& W = rd.weyl_group();
        Weight x = rd.fundamental(0) + 2 * rd.fundamental(1);
        Weight y = rd.rho();
        for (std::size_t i = 0; i < W.size(); ++i) {
            CHECK(rd.pairing(rd.act(W[i], x), rd.act(W[i], y)) == rd.pairing(x, y));
            for (std::size_t j = 0; j < W.size(); ++j) {
                auto k = rd.compose(i, j);
                CHECK(rd.act(W[k], x) == rd.act(W[i], rd.act(W[j], x)));
            }
        }
    }
}

TEST_CASE("dual weights") {
    auto a2 = RootDatum::from_series("A2");
    CHECK(a2.dual_weight(Weight{1, 0}) == Weight{0, 1});
    auto b2 = RootDatum::from_series("B2");
    CHECK(b2.dual_weight(Weight{1, 0}) == Weight{1, 0});
    auto a1 = RootDatum::from_series("A1");
    CHECK(a1.dual_weight(Weight{3}) == Weight{3});
}

TEST_CASE("invalid Cartan matrices are rejected") {
    CHECK_THROWS_AS(RootDatum::from_cartan({{2, -1}, {0, 2}}), RootDatumError);
    CHECK_THROWS_AS(RootDatum::from_cartan({{2, -3}, {-3, 2}}), RootDatumError);  // not positive definite
    CHECK_THROWS_AS(RootDatum::from_cartan({{3}}), RootDatumError);
    CHECK_THROWS(RootDatum::from_series("X3"));
}

TEST_CASE("Weyl dimension oracle sanity") {
    auto a2 = RootDatum::from_series("A2");
    CHECK(oracle::weyl_dimension(a2, Weight{1, 1}) == 8);
    CHECK(oracle::weyl_dimension(a2, Weight{2, 0}) == 6);
    auto g2 = RootDatum::from_series("G2");
    CHECK(oracle::weyl_dimension(g2, Weight{1, 0}) * oracle::weyl_dimension(g2, Weight{0, 1}) == 7 * 14);
}
