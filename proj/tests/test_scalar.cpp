#include "cqg/numeric.hpp"
#include "cqg/scalar.hpp"

#include "doctest.h"

#include <random>

using namespace cqg;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-4, 4), deg(0, 3), sh(-3, 3);
    auto poly = [&](bool nonzero) {
        std::vector<mpz_class> co(deg(rng) + 1);
        for (auto& x : co) x = c(rng);
        if (nonzero && std::all_of(co.begin(), co.end(), [](const mpz_class& x) { return x == 0; })) co[0] = 1;
        return IntPoly(co);
    };
    return Scalar::fraction(sh(rng), poly(false), poly(true));
}

}  // namespace

TEST_CASE("q-numbers") {
    CHECK(qnum(2, 2) == Scalar::v_power(2) + Scalar::v_power(-2));
    CHECK(qnum(1, 1) == Scalar(1));
    CHECK(qnum(0, 3).is_zero());
    CHECK(qnum(-3, 1) == -qnum(3, 1));
    CHECK(qnum(3, 1) == Scalar::v_power(2) + Scalar(1) + Scalar::v_power(-2));
    CHECK(qnum(2, 1).pretty(1) == "q + q^-1");
    // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4
    Scalar expect = Scalar::v_power(4) + Scalar::v_power(2) + Scalar(2) + Scalar::v_power(-2) + Scalar::v_power(-4);
    CHECK(qbinomial_base(4, 2, 1, 1) == expect);
    CHECK_THROWS_AS(q_power(Rational(1, 3), 2), ExponentError);
    CHECK(q_power(Rational(1, 2), 2) == Scalar::v_power(1));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        CHECK(Scalar::parse(a.str()) == a);
    }
}

TEST_CASE("canonical form is unique") {
    // (v^2 - 1)/(v - 1) = v + 1
    Scalar x = Scalar::fraction(0, IntPoly({-1, 0, 1}), IntPoly({-1, 1}));
    CHECK(x == Scalar::v_power(1) + Scalar(1));
    CHECK(x.is_laurent());
    Scalar y = Scalar::fraction(0, IntPoly({2, 4}), IntPoly({6}));
    CHECK(y == Scalar(Rational(1, 3)) + Scalar(Rational(2, 3)) * Scalar::v_power(1));
    CHECK(Scalar(Rational(-2, 4)) == Scalar(Rational(-1, 2)));
}

TEST_CASE("numeric evaluation") {
    NumericContext ctx("2", 50);
    Real v = eval_numeric(qnum(2, 1), 1, ctx);  // q + q^-1 at q = 2
    CHECK(abs(v - Real("2.5")) < Real("1e-45"));
    Real w = eval_numeric(qnum(2, 2), 2, ctx);
    CHECK(abs(w - Real("2.5")) < Real("1e-45"));
    Scalar pole = (Scalar::v_power(1) - Scalar(2)).inverse();
    CHECK_THROWS_AS(eval_numeric(pole, 1, ctx), PoleError);
    CHECK_THROWS(NumericContext("1", 50));
    CHECK_THROWS(NumericContext("2", 10));
}
