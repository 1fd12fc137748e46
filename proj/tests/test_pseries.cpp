#include "cqg/pseries.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace cqg;
using namespace testing_support;

namespace {

std::vector<DoubleSym> all_symbols(OKq& o, const std::vector<Weight>& betas, const std::vector<Weight>& gammas) {
    std::vector<DoubleSym> out;
    for (const auto& b : betas)
        for (const auto& g : gammas) {
            const int nb = o.dim(b), ng = o.dim(g);
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < nb; ++j)
                    for (int k = 0; k < ng; ++k)
                        for (int l = 0; l < ng; ++l) out.push_back({b, i, j, g, k, l});
        }
    return out;
}

DualElem dual_product(const DualElem& x, const DualElem& y) {
    DualElem out;
    for (const auto& [a, c] : x.terms)
        for (const auto& [b, d] : y.terms)
            if (a.gamma == b.gamma && a.l == b.k) out.add(DualSym{a.gamma, a.k, b.l}, c * d);
    return out;
}

}  // namespace

TEST_CASE("block basis and dual functionals") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    for (long mu : {-2, 0, 2}) {
        PrincipalSeries ps(o, Weight{mu}, Weight{0});
        std::vector<std::tuple<Weight, int, int>> basis;
        for (long e = 0; e <= 4; ++e)
            for (const auto& [a, b] : ps.block_indices(Weight{e})) basis.emplace_back(Weight{e}, a, b);
        CHECK(!basis.empty());
        for (const auto& [e1, a1, b1] : basis) {
            CoeffElem v = ps.basis_vector(e1, a1, b1);
            for (const auto& [e2, a2, b2] : basis) {
                Scalar expect = (e1 == e2 && a1 == a2 && b1 == b2) ? Scalar(1) : Scalar();
                CHECK(ps.dual_functional(e2, a2, b2, v) == expect);
            }
        }
    }
}

TEST_CASE("dual action") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    PrincipalSeries ps(o, Weight{0}, Weight{0});
    CoeffElem e0 = ps.basis_vector(Weight{0}, 0, 0);
    CHECK(ps.act_dual(DualElem(DualSym{Weight{0}, 0, 0}), e0) == e0);
    // Ŝ^{-2}(ω[γ;k,l]) · e[η;s,r] = δ_γη δ_sl e[η;k,r]
    for (long g : {0, 2, 4}) {
        const Weight gamma{g};
        for (int k = 0; k < o.dim(gamma); ++k)
            for (int l = 0; l < o.dim(gamma); ++l) {
                DualElem x = o.dual_antipode(DualElem(DualSym{gamma, k, l}), -2);
                for (long e : {0, 2, 4}) {
                    const Weight eta{e};
                    for (const auto& [s, r] : ps.block_indices(eta)) {
                        CoeffElem got = ps.act_dual(x, ps.basis_vector(eta, s, r));
                        CoeffElem expect = (gamma == eta && s == l) ? ps.basis_vector(eta, k, r) : CoeffElem();
                        CHECK(got == expect);
                    }
                }
            }
    }
    // left module for the matrix-unit product
    std::mt19937 rng(41);
    PrincipalSeries ps2(o, Weight{1}, Weight{0});
    for (int t = 0; t < 20; ++t) {
        const Weight g{1 + 2 * (t % 2)};
        std::uniform_int_distribution<int> idx(0, o.dim(g) - 1);
        DualElem x(DualSym{g, idx(rng), idx(rng)}), y(DualSym{g, idx(rng), idx(rng)});
        y.add(DualSym{g, idx(rng), idx(rng)}, Scalar(2));
        for (const auto& [a, b] : ps2.block_indices(g)) {
            CoeffElem v = ps2.basis_vector(g, a, b);
            CHECK(ps2.act_dual(x, ps2.act_dual(y, v)) == ps2.act_dual(dual_product(x, y), v));
        }
    }
}

TEST_CASE("function action") {
    for (const char* label : {"A1", "A2"}) {
        CAPTURE(label);
        auto alg = Algebra::create(label);
        OKq o(alg);
        const auto& rd = alg->rd();
        auto pool = small_dominant(*alg, 3, 2);
        std::mt19937 rng(43);
        const Weight mu = rd.zero();
        PrincipalSeries ps(o, mu, rd.fundamental(0));
        std::vector<CoeffElem> vecs;
        for (const auto& eta : pool)
            for (const auto& [a, b] : ps.block_indices(eta)) vecs.push_back(ps.basis_vector(eta, a, b));
        for (const auto& v : vecs) CHECK(ps.act_function(o.unit(), v) == v);
        for (int t = 0; t < 6; ++t) {
            CoeffElem f = random_elem(o, pool, rng, 1), g = random_elem(o, pool, rng, 1);
            const CoeffElem& v = vecs[t % vecs.size()];
            CHECK(ps.act_function(f, ps.act_function(g, v)) == ps.act_function(o.product(f, g), v));
        }
    }
}

TEST_CASE("function action on the trivial block") {
    // u[ϖ;i,j] · e[0;0,0] with λ = 0 is Σ_c q^{(2ρ, ε_c)} u_ic S(u_cj)
    auto alg = Algebra::create("A1");
    OKq o(alg);
    PrincipalSeries ps(o, Weight{0}, Weight{0});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CoeffElem got = ps.act_function(o.coeff(Weight{1}, i, j), ps.basis_vector(Weight{0}, 0, 0));
            CoeffElem expect;
            for (int c = 0; c < 2; ++c) {
                CoeffElem term = o.product(o.coeff(Weight{1}, i, c), o.antipode(o.coeff(Weight{1}, c, j)));
                expect.add(term, o.k_pair(2 * alg->rd().rho(), Weight{1}, c));
            }
            CHECK(got == expect);
            // a two-term combination: only the V(0) and V(2ϖ) blocks occur
            for (const auto& [s, _] : got.terms) CHECK((s.nu == Weight{0} || s.nu == Weight{2}));
            // at λ = −2ρ the action reduces to the adjoint action, which fixes 1 up to ε
            PrincipalSeries adj(o, Weight{0}, -2 * alg->rd().rho());
            CHECK(adj.act_function(o.coeff(Weight{1}, i, j), o.unit()) == o.unit().scaled(Scalar(i == j ? 1 : 0)));
        }
}

TEST_CASE("Duflo-Moore operator") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    const Weight two_rho = 2 * alg->rd().rho();
    PrincipalSeries ps(o, Weight{1}, Weight{0});
    CHECK_THROWS(ps.duflo_moore_pow(o.unit(), 1));
    for (long e : {1, 3}) {
        const Weight eta{e};
        for (const auto& [a, b] : ps.block_indices(eta)) {
            CoeffElem v = ps.basis_vector(eta, a, b);
            CHECK(ps.duflo_moore_pow(v, 0) == v);
            CHECK(ps.duflo_moore_pow(v, -2) == v.scaled(o.k_pair(two_rho, eta, a)));
            CHECK(ps.duflo_moore_pow(ps.duflo_moore_pow(v, -2), 2) == v);
            // (X, S^{-1}(D^{-2} ξ)) = q^{(−2ρ, μ)} (X, S(ξ))
            CHECK(o.antipode(ps.duflo_moore_pow(v, -2), -1) ==
                  o.antipode(v, 1).scaled(alg->rd().q_pow(-two_rho, ps.mu())));
            for (int k = 0; k < o.dim(eta); ++k)
                for (int l = 0; l < o.dim(eta); ++l) {
                    // D^{-2} = π(K_{2ρ}) and K_{2ρ} ω_kl K_{−2ρ} = q^{(2ρ, ε_k − ε_l)} ω_kl
                    DualElem x(DualSym{eta, k, l});
                    const Scalar c = o.k_pair(two_rho, eta, k) / o.k_pair(two_rho, eta, l);
                    CHECK(ps.duflo_moore_pow(ps.act_dual(x, v), -2) ==
                          ps.act_dual(x.scaled(c), ps.duflo_moore_pow(v, -2)));
                }
        }
    }
}

TEST_CASE("twisted characters: closed form, explicit action and oracle agree") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    const auto& rd = alg->rd();
    std::vector<Weight> ws{Weight{0}, Weight{1}, Weight{2}};
    for (const auto& f : all_symbols(o, ws, ws)) {
        CAPTURE(f.str());
        for (long m = -2; m <= 2; ++m) {
            const Weight mu{m};
            FourierPoly closed = twisted_character_closed(o, f, mu);
            CHECK(closed == twisted_character_explicit(o, f, mu));
        }
        for (const auto& w : rd.weyl_group()) {
            const Weight w0 = rd.shifted_action(w, rd.zero());
            const Weight lambda = -w0 - 2 * rd.rho();
            for (long m = -2; m <= 2; ++m) {
                const Weight mu{m};
                CHECK(fourier_specialize(twisted_character_closed(o, f, mu), rd, lambda) ==
                      twisted_character_oracle(o, f, mu, lambda));
            }
        }
    }
}

TEST_CASE("closed-form characters") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    const Weight z{0};
    CHECK(twisted_character_closed(o, DoubleSym{z, 0, 0, z, 0, 0}, z) == FourierPoly::constant(Scalar(1), 1));
    // μ outside the weights of V(β)
    CHECK(twisted_character_closed(o, DoubleSym{Weight{1}, 0, 0, z, 0, 0}, Weight{3}).is_zero());
    // γ = 0: supported at index 0 only
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto c = twisted_character_closed(o, DoubleSym{Weight{1}, i, j, z, 0, 0}, Weight{1});
            for (const auto& [w, _] : c.terms()) CHECK(w == z);
        }
}

TEST_CASE("Weyl symmetry of closed-form characters") {
    for (const char* label : {"A1", "A2"}) {
        CAPTURE(label);
        auto alg = Algebra::create(label);
        OKq o(alg);
        const auto& rd = alg->rd();
        auto pool = small_dominant(*alg, 3, 1);
        std::mt19937 rng(47);
        for (int t = 0; t < 8; ++t) {
            CoeffSym b = random_symbol(o, pool, rng), g = random_symbol(o, pool, rng);
            DoubleSym f{b.nu, b.a, b.b, g.nu, g.a, g.b};
            const Weight mu = o.weight(b.nu, b.a);
            FourierPoly base = twisted_character_closed(o, f, mu);
            for (const auto& w : rd.weyl_group()) {
                FourierPoly moved = twisted_character_closed(o, f, rd.act(w, mu));
                CHECK(moved == base.relabeled([&](const Weight& x) { return rd.act(w, x); }));
            }
        }
    }
}

TEST_CASE("Hopf trace identity") {
    auto alg = Algebra::create("A1");
    OKq o(alg);
    const auto& rd = alg->rd();
    std::vector<Weight> ws{Weight{0}, Weight{1}, Weight{2}};
    for (const auto& f : all_symbols(o, ws, ws)) {
        CAPTURE(f.str());
        DoubleElem x = hopf_element(o, f);
        Scalar total;
        for (const auto& w : rd.weyl_group()) total += Scalar(w.sign()) * trace_general(o, x, w);
        CHECK(total == double_counit(o, x));
        CHECK(total == Scalar((f.gamma == Weight{0} && f.i == f.j) ? 1 : 0));
    }
}
