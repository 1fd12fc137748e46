#include "cqg/plancherel.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace cqg;
using namespace testing_support;

namespace {

std::vector<Scalar> full_vector(const TauTensor& t) {
    std::vector<Scalar> v(t.module.dim());
    for (std::size_t p = 0; p < t.block.size(); ++p) v[t.block[p]] = t.value[p];
    return v;
}

bool annihilated(const TauTensor& t) {
    const auto v = full_vector(t);
    for (int i = 0; i < t.module.rd->rank(); ++i) {
        for (const auto& x : t.module.E[i].apply(v))
            if (!x.is_zero()) return false;
        for (const auto& x : t.module.F[i].apply(v))
            if (!x.is_zero()) return false;
    }
    return true;
}

std::vector<Weight> a1(std::initializer_list<long> coords) {
    std::vector<Weight> out;
    for (long c : coords) out.push_back(Weight{c});
    return out;
}

}  // namespace

TEST_CASE("density at mu = 0 in rank one") {
    auto alg = Algebra::create("A1");
    const FourierPoly d = measure_density(alg->rd(), Weight{0});
    const Weight two_rho = 2 * alg->rd().rho();
    CHECK(d.terms().size() == 3);
    CHECK(d.coeff(two_rho) == Scalar(Rational(-1, 2)));
    CHECK(d.coeff(Weight{0}) == Scalar(1));
    CHECK(d.coeff(-two_rho) == Scalar(Rational(-1, 2)));
    CHECK(fourier_integrate(d) == Scalar(1));
}

TEST_CASE("total mass and diagonal integral") {
    for (const char* spec : {"A1", "A2", "B2"}) {
        auto alg = Algebra::create(spec);
        const RootDatum& rd = alg->rd();
        CHECK(fourier_integrate(measure_density(rd, rd.zero())) == Scalar(1));
        for (const auto& mu : small_dominant(*alg, 8, 2)) {
            for (const Weight& m : {mu, -mu}) {
                Scalar diag;
                for (const auto& x : rd.weyl_group()) diag += rd.q_pow(2 * rd.act(x, rd.rho()), m);
                diag = diag * Scalar(Rational(1, static_cast<long>(rd.weyl_group().size())));
                CHECK(fourier_integrate(measure_density(rd, m)) == diag);
            }
        }
    }
}

TEST_CASE("density is real and nonnegative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> qd(0.3, 3.0), nd(-5.0, 5.0);
    for (const char* spec : {"A1", "A2"}) {
        auto alg = Algebra::create(spec);
        const RootDatum& rd = alg->rd();
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Real> nu;
            for (int i = 0; i < rd.rank(); ++i) nu.push_back(Real(nd(rng)));
            Weight mu(std::vector<long>(rd.rank(), 0));
            for (int i = 0; i < rd.rank(); ++i) mu[i] = std::uniform_int_distribution<long>(-2, 2)(rng);
            NumericContext ctx(Real(qd(rng)), 50, nu);
            const Complex d = eval_fourier_numeric(measure_density(rd, mu), rd, ctx);
            CHECK(abs(d.im) < Real("1e-40"));
            CHECK(d.re > Real("-1e-40"));
        }
    }
}

TEST_CASE("Weyl denominator residual") {
    auto a1alg = Algebra::create("A1");
    auto a2alg = Algebra::create("A2");
    NumericContext ctx(std::string("1.5"), 50);
    std::vector<std::vector<Real>> nus1{{Real("0.3")}, {Real("1.7")}, {Real("-2.2")}, {Real(0)}};
    CHECK(weyl_denominator_check(a1alg->rd(), Weight{0}, ctx, nus1) < Real("1e-40"));
    CHECK(weyl_denominator_check(a1alg->rd(), Weight{3}, ctx, nus1) < Real("1e-40"));
    std::vector<std::vector<Real>> nus2{{Real("0.3"), Real("-1.1")}, {Real("2.5"), Real("0.4")}, {Real(0), Real(0)}};
    CHECK(weyl_denominator_check(a2alg->rd(), Weight{1, 0}, ctx, nus2) < Real("1e-40"));
    CHECK(weyl_denominator_check(a2alg->rd(), Weight{-1, 2}, ctx, nus2) < Real("1e-40"));
}

TEST_CASE("tau pipelines agree with the counit in rank one") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    CHECK(tau_direct(o, DoubleSym{Weight{0}, 0, 0, Weight{0}, 0, 0}) == Scalar(1));
    CHECK(tau_closed(o, DoubleSym{Weight{0}, 0, 0, Weight{0}, 0, 0}) == Scalar(1));
    for (const auto& f : symbols_up_to(o, a1({0, 1, 2}), a1({0, 1, 2}))) {
        const Scalar e = plancherel_expected(f);
        CHECK_MESSAGE(tau_closed(o, f) == e, f.str());
        CHECK_MESSAGE(tau_direct(o, f) == e, f.str());
    }
}

TEST_CASE("tau_w vanishes off the weights of V(gamma) and matches the principal series trace") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    const RootDatum& rd = alg->rd();
    for (const auto& f : symbols_up_to(o, a1({0, 1}), a1({0, 1, 2}))) {
        for (const auto& w : rd.weyl_group()) {
            const Weight w0 = rd.shifted_action(w, rd.zero());
            const Scalar t = tau_w(o, f, w);
            bool has = false;
            for (int r = 0; r < o.dim(f.gamma); ++r) has = has || o.weight(f.gamma, r) == w0;
            if (!has) CHECK(t.is_zero());
            CHECK(t == trace_general(o, hopf_element(o, f), w));
        }
    }
}

TEST_CASE("tau_tensor at gamma = 0 is the projected coevaluation") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    for (long b : {0, 1, 2}) {
        const TauTensor t = tau_tensor(*alg, Weight{b}, Weight{0});
        REQUIRE(t.exact);
        CHECK(!t.is_zero(Real(0)));
        CHECK(annihilated(t));
        for (const auto& f : symbols_up_to(o, {Weight{b}}, {Weight{0}})) CHECK(tau_from_tensor(o, t, f) == tau_closed(o, f));
    }
    auto a2 = Algebra::create("A2");
    OKq o2(a2);
    const TauTensor t = tau_tensor(*a2, Weight{1, 0}, Weight{0, 0});
    CHECK(annihilated(t));
    for (const auto& f : symbols_up_to(o2, {Weight{1, 0}}, {Weight{0, 0}})) CHECK(tau_from_tensor(o2, t, f) == plancherel_expected(f));
}

TEST_CASE("tau_tensor vanishes for gamma != 0") {
    auto alg = Algebra::create("A1");
    for (long g : {1, 2})
        for (long b : {0, 1, 2, 3}) {
            const TauTensor t = tau_tensor(*alg, Weight{b}, Weight{g});
            REQUIRE(t.exact);
            CHECK(t.is_zero(Real(0)));
        }
    auto a2 = Algebra::create("A2");
    const TauTensor t = tau_tensor(*a2, Weight{1, 0}, Weight{1, 0});
    CHECK(t.is_zero(Real("1e-30")));
}

TEST_CASE("numeric tensor path agrees with the exact one") {
    auto alg = Algebra::create("A1");
    TauTensorOptions opt;
    opt.exact_budget = 0;
    const TauTensor zero = tau_tensor(*alg, Weight{2}, Weight{2}, opt);
    CHECK(!zero.exact);
    CHECK(zero.q_values.size() == 3);
    CHECK(zero.is_zero(Real("1e-30")));
    const TauTensor nonzero = tau_tensor(*alg, Weight{2}, Weight{0}, opt);
    CHECK(!nonzero.is_zero(Real("1e-30")));
}

TEST_CASE("sign mutation breaks the vanishing") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    TauTensorOptions opt;
    opt.signs = false;
    bool some_nonzero = false;
    for (long g : {1, 2}) {
        const TauTensor t = tau_tensor(*alg, Weight{g}, Weight{g}, opt);
        CHECK(annihilated(t));
        some_nonzero = some_nonzero || !t.is_zero(Real(0));
    }
    CHECK(some_nonzero);
    TauOptions unsigned_tau;
    unsigned_tau.signs = false;
    TauOptions no_dm;
    no_dm.d_power = 0;
    bool closed_fails = false, dm_fails = false;
    for (const auto& f : symbols_up_to(o, a1({0, 1, 2}), a1({0, 2}))) {
        closed_fails = closed_fails || tau_closed(o, f, unsigned_tau) != plancherel_expected(f);
        dm_fails = dm_fails || tau_direct(o, f, no_dm) != plancherel_expected(f);
    }
    CHECK(closed_fails);
    CHECK(dm_fails);
}

TEST_CASE("rank one recursion lemma") {
    auto alg = Algebra::create("A1");
    CHECK(sl2_invlemma_check(*alg, 1, 1, 1).pass);
    CHECK(sl2_invlemma_check(*alg, 1, 2, 0).pass);
    CHECK(sl2_invlemma_check(*alg, 1, 2, 2).pass);
    for (long g2 : {1, 2, 3})
        for (long b2 : {0, 1, 2})
            for (long r2 = -g2 + 2; r2 <= g2; r2 += 2) CHECK_MESSAGE(sl2_invlemma_check(*alg, b2, g2, r2).pass, g2 << " " << b2 << " " << r2);
    CHECK_THROWS_AS(sl2_invlemma_check(*alg, 1, 1, -1), std::out_of_range);
    CHECK_THROWS_AS(sl2_invlemma_check(*alg, 1, 2, 4), std::out_of_range);
    CHECK_THROWS_AS(sl2_invlemma_check(*alg, 1, 0, 0), std::invalid_argument);
    auto a2 = Algebra::create("A2");
    CHECK_THROWS_AS(sl2_invlemma_check(*a2, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("classical limit") {
    auto alg = Algebra::create("A1");
    std::vector<Real> hs{Real("1e-3")};
    auto rows = classical_limit_check(alg->rd(), Weight{1}, {Real("0.7")}, hs);
    REQUIRE(rows.size() == 1);
    CHECK(!rows[0].degenerate);
    CHECK(rows[0].deviation < Real("1e-2"));
    rows = classical_limit_check(alg->rd(), Weight{0}, {Real(0)}, hs);
    CHECK(rows[0].degenerate);
    auto a2 = Algebra::create("A2");
    std::vector<Real> ladder{Real("1e-2"), Real("5e-3"), Real("2.5e-3")};
    rows = classical_limit_check(a2->rd(), Weight{1, 2}, {Real("0.4"), Real("-0.9")}, ladder);
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k - 1].deviation / rows[k].deviation >= Real("1.8"));
}

TEST_CASE("parallel sweep is deterministic") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    const auto symbols = symbols_up_to(o, a1({0, 1}), a1({0, 1}));
    SweepOptions opt;
    opt.with_hopf = true;
    const auto serial = verify_plancherel(o, symbols, opt);
    opt.jobs = 3;
    const auto parallel = verify_plancherel(o, symbols, opt);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t n = 0; n < serial.size(); ++n) {
        CHECK(serial[n].pass);
        CHECK(serial[n].symbol == parallel[n].symbol);
        CHECK(*serial[n].tensor == *parallel[n].tensor);
        CHECK(parallel[n].pass);
    }
    for (const auto& r : hopf_trace_identity_check(o, symbols, 2)) CHECK(r.pass);
}
