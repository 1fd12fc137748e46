#pragma once

#include "cqg/algebra.hpp"

#include <functional>
#include <tuple>

namespace cqg {

// u[ν; a, b]: (X, u[ν; a, b]) = ρ_ν(X)_{ab} in the constructed basis of V(ν).
struct CoeffSym {
    Weight nu;
    int a = 0, b = 0;
    bool operator<(const CoeffSym& o) const { return std::tie(nu, a, b) < std::tie(o.nu, o.a, o.b); }
    bool operator==(const CoeffSym&) const = default;
    std::string str() const;
};

// ω[γ; k, l], the dual basis of matrix units: (ω[γ;k,l], u[ν;a,b]) = δ_{γν} δ_{ka} δ_{lb}.
struct DualSym {
    Weight gamma;
    int k = 0, l = 0;
    bool operator<(const DualSym& o) const { return std::tie(gamma, k, l) < std::tie(o.gamma, o.k, o.l); }
    bool operator==(const DualSym&) const = default;
    std::string str() const;
};

// Finite linear combination of symbols with Scalar coefficients; zero terms are never stored.
template <class Sym>
struct LinComb {
    std::map<Sym, Scalar> terms;

    LinComb() = default;
    explicit LinComb(const Sym& s, Scalar c = Scalar(1)) {
        if (!c.is_zero()) terms.emplace(s, std::move(c));
    }
    bool is_zero() const { return terms.empty(); }
    Scalar coeff(const Sym& s) const {
        auto it = terms.find(s);
        return it == terms.end() ? Scalar() : it->second;
    }
    void add(const Sym& s, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = terms.emplace(s, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    void add(const LinComb& o, const Scalar& c = Scalar(1)) {
        for (const auto& [s, x] : o.terms) add(s, c * x);
    }
    LinComb scaled(const Scalar& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [s, x] : terms) r.terms.emplace(s, x * c);
        return r;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) {
        a.add(b);
        return a;
    }
    friend LinComb operator-(LinComb a, const LinComb& b) {
        a.add(b, Scalar(-1));
        return a;
    }
    bool operator==(const LinComb&) const = default;
};

using CoeffElem = LinComb<CoeffSym>;
using DualElem = LinComb<DualSym>;
// Σ c · x ⊗ y
using CoeffTensor = std::map<std::pair<CoeffSym, CoeffSym>, Scalar>;

// Letter of a word in U_q(g).
struct UqLetter {
    enum Kind { E, F, K } kind;
    int i = 0;       // generator index for E, F
    Weight lambda;   // for K_λ
    static UqLetter e(int i) { return {E, i, {}}; }
    static UqLetter f(int i) { return {F, i, {}}; }
    static UqLetter k(Weight l) { return {K, 0, std::move(l)}; }
};
using UqWord = std::vector<UqLetter>;  // product X = X_0 X_1 ... X_{n-1}

// Normal-form arithmetic in O(K_q). Products use the cached tensor-product
// decompositions of the Algebra, antipodes the cached dual isomorphisms.
class OKq {
public:
    explicit OKq(std::shared_ptr<Algebra> alg) : alg_(std::move(alg)) {}

    Algebra& algebra() const { return *alg_; }
    const RootDatum& rd() const { return alg_->rd(); }

    CoeffElem unit() const { return CoeffElem(CoeffSym{rd().zero(), 0, 0}); }
    CoeffElem coeff(const Weight& nu, int a, int b) const;

    CoeffElem product(const CoeffElem& x, const CoeffElem& y);
    CoeffElem product(const std::vector<CoeffElem>& factors);
    CoeffElem symbol_product(const CoeffSym& x, const CoeffSym& y);

    // S^power for any nonzero integer power
    CoeffElem antipode(const CoeffElem& x, int power = 1);
    CoeffElem symbol_antipode(const CoeffSym& s, int power);

    Scalar counit(const CoeffElem& x) const;
    // unit coefficient of the normal form
    Scalar haar(const CoeffElem& x) const { return x.coeff(CoeffSym{rd().zero(), 0, 0}); }
    // φ(x y) without forming the full product
    Scalar haar_product(const CoeffElem& x, const CoeffElem& y);
    // φ(x_1 ... x_n)
    Scalar haar_word(const std::vector<CoeffElem>& factors);

    CoeffTensor coproduct(const CoeffElem& x) const;

    // (X, x)
    Scalar pair_uq(const UqWord& X, const CoeffElem& x);
    // (ω, x)
    static Scalar pair_dual(const DualElem& w, const CoeffElem& x);
    // Ŝ^power on D(K_q), defined by (Ŝ ω, f) = (ω, S^{-1} f)
    DualElem dual_antipode(const DualElem& w, int power = 1);

    // q^{(λ, wt)} for a basis index of V(ν)
    Scalar k_pair(const Weight& lambda, const Weight& nu, int a) const;
    const Weight& weight(const Weight& nu, int a) const;
    int dim(const Weight& nu) const { return alg_->irrep(nu)->dim(); }

private:
    std::shared_ptr<Algebra> alg_;
    std::shared_mutex mu_;
    std::map<std::pair<CoeffSym, CoeffSym>, CoeffElem> products_;
    std::map<std::pair<CoeffSym, int>, CoeffElem> antipodes_;
};

}  // namespace cqg
