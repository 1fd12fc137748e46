#include "cqg/algebra.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace cqg;

namespace {

std::vector<std::pair<std::string, Weight>> small_irreps() {
    return {{"A1", Weight{1}}, {"A1", Weight{2}}, {"A1", Weight{5}}, {"A2", Weight{1, 0}}, {"A2", Weight{1, 1}},
            {"A2", Weight{2, 1}}, {"B2", Weight{1, 0}}, {"B2", Weight{0, 1}}, {"B2", Weight{1, 1}},
            {"G2", Weight{1, 0}}, {"G2", Weight{0, 1}}, {"A3", Weight{1, 0, 1}}};
}

}  // namespace

TEST_CASE("irreducible modules match Weyl and Freudenthal") {
    for (const auto& [label, mu] : small_irreps()) {
        CAPTURE(label);
        CAPTURE(mu.str());
        Algebra alg(RootDatum::from_series(label));
        auto v = alg.irrep(mu);
        CHECK(Rational(v->dim()) == oracle::weyl_dimension(alg.rd(), mu));
        std::map<Weight, long> mult;
        for (int b = 0; b < v->dim(); ++b) mult[v->weight(b)]++;
        CHECK(mult == oracle::freudenthal(alg.rd(), mu));
        CHECK(relation_failures(v->module).empty());
        CHECK(gram_failures(v->module).empty());
    }
}

TEST_CASE("dual modules satisfy the relations and carry invariant forms") {
    for (const auto& [label, mu] : small_irreps()) {
        CAPTURE(label);
        CAPTURE(mu.str());
        Algebra alg(RootDatum::from_series(label));
        auto v = alg.irrep(mu);
        for (Twist t : {Twist::S, Twist::Sinv}) {
            Module d = dual_module(v->module, t);
            CHECK(relation_failures(d).empty());
            CHECK(gram_failures(d).empty());
        }
    }
}

TEST_CASE("quantum dimension") {
    Algebra a1(RootDatum::from_series("A1"));
    // V(n) has quantum dimension [n+1]
    for (long n = 0; n < 6; ++n) CHECK(a1.qdim(Weight{n}) == qnum(n + 1, 2));
    Algebra a2(RootDatum::from_series("A2"));
    // product over positive roots of [(λ+ρ, α)]/[(ρ, α)]
    for (const Weight& mu : {Weight{1, 0}, Weight{1, 1}, Weight{2, 1}}) {
        const auto& rd = a2.rd();
        Scalar expect(1);
        for (const auto& a : rd.positive_roots())
            expect *= qnum(rd.pairing(mu + rd.rho(), a), rd.L()) / qnum(rd.pairing(rd.rho(), a), rd.L());
        CHECK(a2.qdim(mu) == expect);
    }
}

TEST_CASE("tensor products decompose as predicted") {
    const std::vector<std::tuple<std::string, Weight, Weight>> cases{
        {"A1", Weight{1}, Weight{1}}, {"A1", Weight{2}, Weight{3}}, {"A2", Weight{1, 0}, Weight{0, 1}},
        {"A2", Weight{1, 1}, Weight{1, 0}}, {"B2", Weight{1, 0}, Weight{0, 1}}};
    for (const auto& [label, a, b] : cases) {
        CAPTURE(label);
        Algebra alg(RootDatum::from_series(label));
        auto d = alg.product_decomposition(a, b);
        std::map<Weight, long> got;
        for (const auto& c : d->components) got[c.highest] = c.multiplicity;
        CHECK(got == oracle::tensor_multiplicities(alg.rd(), a, b));
        const int n = d->phi.rows();
        CHECK(d->phi * d->phi_inv == SMat::identity(n));
        // the trivial projection agrees with the isotypic projection
        Module t = tensor(alg.irrep(a)->module, alg.irrep(b)->module);
        CHECK(trivial_projection(t) == d->isotypic_projection(alg.rd().zero()));
        CHECK(relation_failures(t).empty());
        CHECK(gram_failures(t).empty());
    }
}

TEST_CASE("antipode isomorphisms intertwine") {
    for (const auto& [label, mu] : small_irreps()) {
        CAPTURE(label);
        Algebra alg(RootDatum::from_series(label));
        for (Twist t : {Twist::S, Twist::Sinv}) {
            auto iso = alg.antipode_iso(mu, t);
            CHECK(iso->source == alg.dual_weight(mu));
            Module d = dual_module(alg.irrep(mu)->module, t);
            const Module& src = alg.irrep(iso->source)->module;
            for (int i = 0; i < alg.rd().rank(); ++i) {
                CHECK(d.E[i] * iso->iota == iso->iota * src.E[i]);
                CHECK(d.F[i] * iso->iota == iso->iota * src.F[i]);
            }
        }
    }
}
