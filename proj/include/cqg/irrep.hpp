#pragma once

#include "cqg/module.hpp"

namespace cqg {

// V(μ) with basis vectors F_{letter[b]} · (basis vector parent[b]); index 0 is
// the highest weight vector with ⟨v_μ, v_μ⟩ = 1.
struct Irrep {
    Weight highest;
    Module module;
    std::vector<int> parent;
    std::vector<int> letter;
    std::vector<int> level;

    int dim() const { return module.dim(); }
    const Weight& weight(int b) const { return module.weights[b]; }
    // F-word of basis vector b, leftmost letter applied last
    std::vector<int> word(int b) const;
};

struct NotDominantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Irrep build_irrep(const RootDatumPtr& rd, const Weight& mu);

// Images of the basis of V(λ) under the module map sending v_λ to x, a highest
// weight vector of weight λ in m. Columns are full coordinates of m.
std::vector<std::map<int, Scalar>> embed_irrep(const Irrep& v, const Module& m, const std::map<int, Scalar>& x);

}  // namespace cqg
