#pragma once

#include "cqg/pseries.hpp"

#include <functional>
#include <optional>

namespace cqg {

// (1/|W|) Σ_{x,y} (−1)^{l(x)+l(y)} q^{(xρ+yρ, μ)} at Fourier index xρ − yρ
FourierPoly measure_density(const RootDatum& rd, const Weight& mu, bool signs = true);

// max over the torus points of |∏_α |q^{(α,μ+iν)/2} − q^{−(α,μ+iν)/2}|² − |W| · density(ν)|
Real weyl_denominator_check(const RootDatum& rd, const Weight& mu, const NumericContext& ctx,
                            const std::vector<std::vector<Real>>& nus);

struct TauOptions {
    bool signs = true;  // (−1)^{l(w)} in the Weyl sums
    int d_power = -2;   // power of the Duflo-Moore operator in the characters
};

Scalar tau_w(OKq& o, const DoubleSym& f, const WeylElement& w);
Scalar tau_closed(OKq& o, const DoubleSym& f, const TauOptions& opt = {});
// Σ_μ ∫ character · density over the weights μ of V(β)
Scalar tau_direct(OKq& o, const DoubleSym& f, const TauOptions& opt = {});
// ε_{G_q}(f) = δ_{γ0} δ_ij
Scalar plancherel_expected(const DoubleSym& f);

// τ_{βγ} in V(γ) ⊗ V(β) ⊗ V(γ)* ⊗ V(β)* (duals twisted by S), restricted to
// the weight-0 block whose indices are listed in `block`.
struct TauTensor {
    Weight beta, gamma;
    int dim_beta = 0, dim_gamma = 0;
    Module module;
    std::vector<int> block;
    bool exact = true;
    std::vector<Scalar> value;            // exact path: P(T) on the block
    std::vector<std::string> q_values;    // numeric path: sample points
    Real max_abs = 0;                     // numeric path: max |P(T)| over samples
    // exact path only: full-coordinate entry
    Scalar entry(int l, int i, int k, int j) const;
    bool is_zero(const Real& tol) const;
};

struct TauTensorOptions {
    int exact_budget = 120;  // largest weight-0 block handled exactly
    bool signs = true;
    unsigned digits = 50;
    int samples = 3;
    std::uint64_t seed = 1;
};

TauTensor tau_tensor(Algebra& alg, const Weight& beta, const Weight& gamma, const TauTensorOptions& opt = {});
// dim_q V(γ) q^{−(2ρ, ε_l)} [τ_{βγ}]_{(l,i,k,j)}
Scalar tau_from_tensor(OKq& o, const TauTensor& t, const DoubleSym& f);

// A1 recursion between consecutive r (half-integers given as doubled integers).
struct InvLemmaResult {
    bool pass = false;
    std::string detail;
};
InvLemmaResult sl2_invlemma_check(Algebra& alg, long beta2, long gamma2, long r2);

struct PlancherelReport {
    std::string algebra;
    DoubleSym symbol;
    std::optional<Scalar> closed, direct, tensor, hopf;
    Scalar expected;
    bool pass = false;
    std::string grade = "exact";
    double wall_time_ms = 0;
};

struct SweepOptions {
    bool with_tensor = true;
    bool with_hopf = false;
    int jobs = 1;
    TauOptions tau;
};

std::vector<DoubleSym> symbols_up_to(OKq& o, const std::vector<Weight>& betas, const std::vector<Weight>& gammas);
std::vector<PlancherelReport> verify_plancherel(OKq& o, const std::vector<DoubleSym>& symbols, const SweepOptions& opt);
std::vector<PlancherelReport> hopf_trace_identity_check(OKq& o, const std::vector<DoubleSym>& symbols, int jobs = 1);

struct ClassicalRow {
    Real h, ratio, deviation;
    bool degenerate = false;
};
std::vector<ClassicalRow> classical_limit_check(const RootDatum& rd, const Weight& mu, const std::vector<Real>& nu,
                                                const std::vector<Real>& hs, unsigned digits = 50);

// Run f(k) for k in [0, n) on `jobs` threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f);

}  // namespace cqg
