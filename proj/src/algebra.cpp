#include "cqg/algebra.hpp"

namespace cqg {

Decomposition decompose(const Module& m, Algebra& alg) {
    const RootDatum& rd = *m.rd;
    Decomposition dec;
    const int dim = m.dim();
    dec.phi = SMat(dim, dim);
    std::vector<Weight> col_weight;
    int col = 0;
    for (const auto& [lam, idx] : m.weight_blocks()) {
        if (!lam.is_dominant()) continue;
        int rows = 0;
        std::vector<DMat> up;
        for (int i = 0; i < rd.rank(); ++i) {
            up.push_back(e_block(m, i, lam));
            rows += up.back().rows();
        }
        DMat stacked(rows, static_cast<int>(idx.size()));
        int r0 = 0;
        for (const auto& u : up) {
            for (int r = 0; r < u.rows(); ++r)
                for (int c = 0; c < u.cols(); ++c) stacked(r0 + r, c) = u(r, c);
            r0 += u.rows();
        }
        DMat hw = kernel(stacked);
        if (hw.cols() == 0) continue;
        auto v = alg.irrep(lam);
        Decomposition::Component comp{lam, hw.cols(), col, v->dim()};
        for (int t = 0; t < hw.cols(); ++t) {
            std::map<int, Scalar> x;
            for (std::size_t r = 0; r < idx.size(); ++r)
                if (!hw(static_cast<int>(r), t).is_zero()) x[idx[r]] = hw(static_cast<int>(r), t);
            auto cols = embed_irrep(*v, m, x);
            for (int p = 0; p < v->dim(); ++p) {
                if (col >= dim) throw std::logic_error("decompose: too many components");
                dec.phi.set_column(col++, cols[p]);
                col_weight.push_back(v->weight(p));
                dec.col_comp.push_back(static_cast<int>(dec.components.size()));
                dec.col_copy.push_back(t);
                dec.col_index.push_back(p);
            }
        }
        dec.components.push_back(comp);
    }
    if (col != dim) throw std::logic_error("decompose: components do not span the module");

    dec.phi_inv = SMat(dim, dim);
    std::map<Weight, std::vector<int>> cols_by_weight;
    for (int c = 0; c < dim; ++c) cols_by_weight[col_weight[c]].push_back(c);
    for (const auto& [w, rows] : m.weight_blocks()) {
        const auto& cols = cols_by_weight.at(w);
        const int n = static_cast<int>(rows.size());
        if (static_cast<int>(cols.size()) != n) throw std::logic_error("decompose: weight block mismatch");
        DMat b(n, n);
        std::map<int, int> rpos;
        for (int r = 0; r < n; ++r) rpos[rows[r]] = r;
        for (int c = 0; c < n; ++c)
            for (const auto& [r, x] : dec.phi.column(cols[c])) b(rpos.at(r), c) = x;
        DMat bi = inverse(b);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r)
                if (!bi(c, r).is_zero()) dec.phi_inv.add(cols[c], rows[r], bi(c, r));
    }
    dec.phi_t = dec.phi.transpose();
    return dec;
}

SMat Decomposition::isotypic_projection(const Weight& lambda) const {
    const int dim = phi.rows();
    std::vector<Scalar> sel(dim, Scalar());
    for (const auto& c : components)
        if (c.highest == lambda)
            for (int k = 0; k < c.multiplicity * c.dim; ++k) sel[c.offset + k] = Scalar(1);
    return phi * SMat::diagonal(sel) * phi_inv;
}

int Decomposition::multiplicity(const Weight& lambda) const {
    for (const auto& c : components)
        if (c.highest == lambda) return c.multiplicity;
    return 0;
}

Algebra::Algebra(RootDatum rd) : rd_(std::make_shared<const RootDatum>(std::move(rd))) {}

std::shared_ptr<Algebra> Algebra::create(const std::string& spec) {
    return std::make_shared<Algebra>(RootDatum::from_series(spec));
}

std::shared_ptr<const Irrep> Algebra::irrep(const Weight& mu) {
    return cached(irreps_, mu, [&] { return build_irrep(rd_, mu); });
}

std::shared_ptr<const Decomposition> Algebra::product_decomposition(const Weight& first, const Weight& second) {
    return cached(products_, std::make_pair(first, second), [&] {
        auto a = irrep(first);
        auto b = irrep(second);
        return decompose(tensor(a->module, b->module), *this);
    });
}

std::shared_ptr<const AntipodeIso> Algebra::antipode_iso(const Weight& nu, Twist twist) {
    return cached(antipodes_, std::make_pair(nu, static_cast<int>(twist)), [&] {
        auto v = irrep(nu);
        Decomposition d = decompose(dual_module(v->module, twist), *this);
        if (d.components.size() != 1 || d.components[0].multiplicity != 1)
            throw std::logic_error("dual of an irreducible module is not irreducible");
        return AntipodeIso{d.components[0].highest, d.phi, d.phi_inv};
    });
}

Scalar Algebra::qdim(const Weight& mu) {
    return *cached(qdims_, mu, [&] { return quantum_dimension(irrep(mu)->module); });
}

}  // namespace cqg
