#pragma once

#include "cqg/fourier.hpp"
#include "cqg/okq.hpp"

#include <set>

namespace cqg {

// f = u[β; i, j] ⊗ ω[γ; k, l] in O(K_q) ⊗ D(K_q)
struct DoubleSym {
    Weight beta;
    int i = 0, j = 0;
    Weight gamma;
    int k = 0, l = 0;
    bool operator<(const DoubleSym& o) const {
        return std::tie(beta, i, j, gamma, k, l) < std::tie(o.beta, o.i, o.j, o.gamma, o.k, o.l);
    }
    bool operator==(const DoubleSym&) const = default;
    std::string str() const;
};

// x ⋈ g in D(G_q) = D(K_q) ⋈ O(K_q), acting by ξ ↦ x · (g · ξ).
struct DoubleTerm {
    DualElem x;
    CoeffElem g;
};
using DoubleElem = std::vector<DoubleTerm>;

struct UnsupportedPathError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Block vectors e[η; a, b] = S^{-1}(u[η; b, a]) have coaction weight −ε_b, so
// Γ(E_μ) is spanned by those with ε_b = kBlockSign · μ.
inline constexpr int kBlockSign = -1;

// Γ(E_{μ,λ}) with exact λ. Vectors are elements of O(K_q) in normal form.
class PrincipalSeries {
public:
    PrincipalSeries(OKq& o, Weight mu, Weight lambda) : o_(o), mu_(std::move(mu)), lambda_(std::move(lambda)) {}

    const Weight& mu() const { return mu_; }
    const Weight& lambda() const { return lambda_; }

    // index pairs (a, b) of the block vectors e[η; a, b]
    std::vector<std::pair<int, int>> block_indices(const Weight& eta) const;
    CoeffElem basis_vector(const Weight& eta, int a, int b);
    // e*[η; a, b](ξ) = q^{(2ρ, ε_a)} dim_q V(η) φ(u[η; a, b] ξ)
    Scalar dual_functional(const Weight& eta, int a, int b, const CoeffElem& xi);

    // x · ξ = (Ŝ(x), ξ_(1)) ξ_(2)
    CoeffElem act_dual(const DualElem& x, const CoeffElem& xi);
    // f · ξ = f_(1) ξ S(f_(3)) (K_{2ρ+λ}, f_(2))
    CoeffElem act_function(const CoeffElem& f, const CoeffElem& xi);
    CoeffElem act(const DoubleElem& x, const CoeffElem& xi);
    // D^n ξ = (K_{nρ}, ξ_(1)) ξ_(2); D = π(K_{−ρ} ⋈ 1)
    CoeffElem duflo_moore_pow(const CoeffElem& xi, int n) const;

    // Σ over the block vectors with η ∈ block of e*(op(e))
    template <class Op>
    Scalar trace(const std::set<Weight>& block, Op&& op);

    // e-labels η on which x acts nontrivially
    std::set<Weight> support(const DoubleElem& x) const;

private:
    OKq& o_;
    Weight mu_, lambda_;
};

// Closed-form twisted character tr(π_{μ,iν}(f) D^{-2}) as a Fourier polynomial in ν.
FourierPoly twisted_character_closed(OKq& o, const DoubleSym& f, const Weight& mu);

// The same trace computed from the explicit action
// π(f)ξ = Σ dim_q V(γ) φ(S(u^γ_lr) S^{-1}(ξ) u^γ_rk u^β_mj) q^{(−2ρ, ε_l+ε_r)} q^{−(iν, ε_r)} u^β_im
// on the basis u^β_{an}, ε_n = μ, with D^{d_power} in place of D^{-2}.
FourierPoly twisted_character_explicit(OKq& o, const DoubleSym& f, const Weight& mu, int d_power = -2);

// Concrete trace at exact λ: the explicit action composed with D^{-2}, traced
// on the block basis e[η; a, b] through the dual functionals.
Scalar twisted_character_oracle(OKq& o, const DoubleSym& f, const Weight& mu, const Weight& lambda);

// x(f) = q^{(−2ρ, ε_l)} Ŝ^{-2}(ω[γ;k,l]) ⋈ S^{-1}(u[β;i,j])
DoubleElem hopf_element(OKq& o, const DoubleSym& f);

// tr π_{−w.0, −w.0−2ρ}(x)
Scalar trace_general(OKq& o, const DoubleElem& x, const WeylElement& w);

// ε̂_{G_q}(x ⋈ g) = ε̂(x) ε(g)
Scalar double_counit(OKq& o, const DoubleElem& x);

// ---- implementation ----

template <class Op>
Scalar PrincipalSeries::trace(const std::set<Weight>& block, Op&& op) {
    Scalar t;
    for (const auto& eta : block)
        for (const auto& [a, b] : block_indices(eta)) t += dual_functional(eta, a, b, op(basis_vector(eta, a, b)));
    return t;
}

}  // namespace cqg
