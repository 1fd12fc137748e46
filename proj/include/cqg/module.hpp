#pragma once

#include "cqg/linalg.hpp"
#include "cqg/rootdata.hpp"
#include "cqg/scalar.hpp"
#include "cqg/weight.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cqg {

using SMat = SparseMatrix<Scalar>;
using DMat = Matrix<Scalar>;
using RootDatumPtr = std::shared_ptr<const RootDatum>;

enum class Twist { S, Sinv };

// Finite-dimensional weight module given by weight-graded basis and the
// matrices of E_i, F_i. K_λ acts by q^{(λ, wt)} on each basis vector.
struct Module {
    RootDatumPtr rd;
    std::vector<Weight> weights;
    std::vector<SMat> E, F;
    // invariant form ⟨x, y⟩ = xᵀ G y, when known
    std::optional<SMat> gram;
    std::string label;

    int dim() const { return static_cast<int>(weights.size()); }
    std::map<Weight, std::vector<int>> weight_blocks() const;
    std::vector<int> block(const Weight& w) const;
    // q^{(λ, wt_b)} for each basis index b
    std::vector<Scalar> k_diagonal(const Weight& lambda) const;
    SMat K(const Weight& lambda) const { return SMat::diagonal(k_diagonal(lambda)); }
};

Module trivial_module(const RootDatumPtr& rd);

// Coproduct action on M ⊗ N: E ↦ E ⊗ K_i + 1 ⊗ E, F ↦ F ⊗ 1 + K_i^{-1} ⊗ F.
// Basis index (x, y) ↦ x · dim N + y.
Module tensor(const Module& m, const Module& n);
Module tensor(const std::vector<const Module*>& factors);

// Contragredient module on the dual basis: ρ*(X) = ρ(Ŝ^{±1}(X))ᵀ.
Module dual_module(const Module& m, Twist twist);

// Each failed relation is reported as a human-readable line.
std::vector<std::string> relation_failures(const Module& m);
// ⟨E_i x, y⟩ = ⟨x, K_i F_i y⟩ and symmetry of G.
std::vector<std::string> gram_failures(const Module& m);

// Basis (as columns, in full coordinates) of the weight-0 vectors killed by all E_i.
DMat invariant_vectors(const Module& m);

// Projection onto the trivial isotypic component along the sum of the
// nontrivial ones (equal to the Gram-orthogonal projection for any invariant form).
SMat trivial_projection(const Module& m);

// The same projection restricted to the weight-0 block; rows/cols follow block(0).
// Generic over the field so the numeric path can reuse it.
template <class T, class P>
Matrix<T> trivial_projection_block(const std::vector<Matrix<T>>& up, const std::vector<Matrix<T>>& in, int zdim,
                                   const P& policy);

// q-dimension tr K_{2ρ}
Scalar quantum_dimension(const Module& m);
Scalar trace_k(const Module& m, const Weight& lambda);

// E_i restricted to the block of weight `from` into the block of weight from + α_i,
// rows/cols in block order.
DMat e_block(const Module& m, int i, const Weight& from);

// ---- implementation of the generic block projection ----

template <class T, class P>
Matrix<T> trivial_projection_block(const std::vector<Matrix<T>>& up, const std::vector<Matrix<T>>& in, int zdim,
                                   const P& policy) {
    // invariant vectors: kernel of the stacked maps Z → Z + α_i
    int rows = 0;
    for (const auto& u : up) rows += u.rows();
    Matrix<T> stacked(rows, zdim);
    int r0 = 0;
    for (const auto& u : up) {
        for (int i = 0; i < u.rows(); ++i)
            for (int j = 0; j < zdim; ++j) stacked(r0 + i, j) = u(i, j);
        r0 += u.rows();
    }
    Matrix<T> V = kernel(stacked, policy);
    // invariant functionals: w with w · E_i(−α_i → 0) = 0
    int cols = 0;
    for (const auto& e : in) cols += e.cols();
    Matrix<T> wide(cols, zdim);
    int c0 = 0;
    for (const auto& e : in) {
        for (int i = 0; i < zdim; ++i)
            for (int j = 0; j < e.cols(); ++j) wide(c0 + j, i) = e(i, j);
        c0 += e.cols();
    }
    Matrix<T> W = kernel(wide, policy);
    if (W.cols() != V.cols()) throw SingularMatrixError("module is not completely reducible at weight 0");
    Matrix<T> P0(zdim, zdim);
    if (V.cols() == 0) return P0;
    Matrix<T> Wt = W.transpose();
    Matrix<T> pairing = Wt * V;
    Matrix<T> pinv = inverse(pairing, policy);
    return V * (pinv * Wt);
}

}  // namespace cqg
