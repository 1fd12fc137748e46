#pragma once

#include "cqg/irrep.hpp"
#include "cqg/module.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>

namespace cqg {

class Algebra;

// M ≅ ⊕ V(λ)^{m_λ}. Column (λ, t, p) of phi is the image of basis vector p of
// the t-th copy of V(λ).
struct Decomposition {
    struct Component {
        Weight highest;
        int multiplicity = 0;
        int offset = 0;  // first column
        int dim = 0;     // dim V(λ)
    };
    std::vector<Component> components;
    SMat phi, phi_inv;
    SMat phi_t;  // transpose of phi, for row access
    // for each column: owning component, copy and basis index in V(λ)
    std::vector<int> col_comp, col_copy, col_index;

    int column(std::size_t comp, int copy, int p) const {
        const auto& c = components[comp];
        return c.offset + copy * c.dim + p;
    }
    // projection onto the isotypic component of λ; zero if absent
    SMat isotypic_projection(const Weight& lambda) const;
    int multiplicity(const Weight& lambda) const;
};

Decomposition decompose(const Module& m, Algebra& alg);

// Isomorphism ι: V(ν†) → V(ν)*, where the dual carries the given twist.
struct AntipodeIso {
    Weight source;  // ν†
    SMat iota, iota_inv;
};

// Root datum together with caches of irreps, tensor-product decompositions
// and antipode isomorphisms. Caches are safe for concurrent readers.
class Algebra {
public:
    explicit Algebra(RootDatum rd);
    static std::shared_ptr<Algebra> create(const std::string& spec);

    const RootDatum& rd() const { return *rd_; }
    const RootDatumPtr& rd_ptr() const { return rd_; }

    std::shared_ptr<const Irrep> irrep(const Weight& mu);
    // decomposition of V(first) ⊗ V(second)
    std::shared_ptr<const Decomposition> product_decomposition(const Weight& first, const Weight& second);
    std::shared_ptr<const AntipodeIso> antipode_iso(const Weight& nu, Twist twist);
    // −w₀ ν
    Weight dual_weight(const Weight& nu) const { return rd_->dual_weight(nu); }
    Scalar qdim(const Weight& mu);

private:
    template <class K, class V, class F>
    std::shared_ptr<const V> cached(std::map<K, std::shared_ptr<const V>>& cache, const K& key, F&& make);

    RootDatumPtr rd_;
    std::shared_mutex mu_;
    std::map<Weight, std::shared_ptr<const Irrep>> irreps_;
    std::map<std::pair<Weight, Weight>, std::shared_ptr<const Decomposition>> products_;
    std::map<std::pair<Weight, int>, std::shared_ptr<const AntipodeIso>> antipodes_;
    std::map<Weight, std::shared_ptr<const Scalar>> qdims_;
};

template <class K, class V, class F>
std::shared_ptr<const V> Algebra::cached(std::map<K, std::shared_ptr<const V>>& cache, const K& key, F&& make) {
    {
        std::shared_lock lock(mu_);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = std::make_shared<const V>(make());
    std::unique_lock lock(mu_);
    auto [it, inserted] = cache.emplace(key, value);
    return it->second;
}

}  // namespace cqg
