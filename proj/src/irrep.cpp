#include "cqg/irrep.hpp"

#include <algorithm>

namespace cqg {

namespace {

using SVec = std::map<int, Scalar>;

void axpy(SVec& y, const Scalar& a, const SVec& x) {
    for (const auto& [i, xi] : x) {
        auto [it, ins] = y.emplace(i, a * xi);
        if (!ins) {
            it->second += a * xi;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

}  // namespace

std::vector<int> Irrep::word(int b) const {
    std::vector<int> w;
    while (b > 0) {
        w.push_back(letter[b]);
        b = parent[b];
    }
    return w;
}

Irrep build_irrep(const RootDatumPtr& rdp, const Weight& mu) {
    const RootDatum& rd = *rdp;
    const int n = rd.rank();
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("weight has wrong rank");
    if (!mu.is_dominant()) throw NotDominantError("highest weight " + mu.str() + " is not dominant");

    Irrep v;
    v.highest = mu;
    std::vector<Weight> wts{mu};
    std::vector<std::vector<int>> words{{}};
    v.parent = {-1};
    v.letter = {-1};
    v.level = {0};
    std::vector<std::vector<SVec>> eimg(n), fimg(n);
    for (int j = 0; j < n; ++j) {
        eimg[j].emplace_back();
        fimg[j].emplace_back();
    }
    std::map<std::pair<int, int>, Scalar> gram{{{0, 0}, Scalar(1)}};

    std::vector<int> current{0};
    while (!current.empty()) {
        struct Candidate {
            int b, i;
            std::vector<int> word;
        };
        std::map<Weight, std::vector<Candidate>> groups;
        for (int b : current)
            for (int i = 0; i < n; ++i) {
                std::vector<int> w{i};
                w.insert(w.end(), words[b].begin(), words[b].end());
                groups[wts[b] - rd.simple_root(i)].push_back({b, i, std::move(w)});
            }
        std::vector<int> next;
        for (auto& [lam, cands] : groups) {
            std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.word < y.word; });
            // coordinates: blocks of weight lam + α_j, already constructed
            std::vector<std::vector<int>> target(n);
            std::vector<int> offset(n + 1, 0);
            for (int j = 0; j < n; ++j) {
                const Weight up = lam + rd.simple_root(j);
                for (int k = 0; k < static_cast<int>(wts.size()); ++k)
                    if (wts[k] == up) target[j].push_back(k);
                offset[j + 1] = offset[j] + static_cast<int>(target[j].size());
            }
            const int nc = static_cast<int>(cands.size());
            std::vector<std::vector<SVec>> images(nc, std::vector<SVec>(n));
            DMat mat(offset[n], nc);
            for (int c = 0; c < nc; ++c) {
                const auto& cand = cands[c];
                for (int j = 0; j < n; ++j) {
                    SVec img;
                    for (const auto& [k, x] : eimg[j][cand.b]) axpy(img, x, fimg[cand.i][k]);
                    if (j == cand.i) {
                        Scalar h = qnum_base(wts[cand.b][cand.i], rd.d(cand.i), rd.L());
                        axpy(img, h, SVec{{cand.b, Scalar(1)}});
                    }
                    for (const auto& [k, x] : img) {
                        auto pos = std::find(target[j].begin(), target[j].end(), k);
                        if (pos == target[j].end()) throw std::logic_error("build_irrep: E image leaves its weight space");
                        mat(offset[j] + static_cast<int>(pos - target[j].begin()), c) = x;
                    }
                    images[c][j] = std::move(img);
                }
            }
            DMat red = mat;
            auto pivots = rref(red);
            std::vector<int> new_index;
            for (int p : pivots) {
                const auto& cand = cands[p];
                int idx = static_cast<int>(wts.size());
                wts.push_back(lam);
                words.push_back(cand.word);
                v.parent.push_back(cand.b);
                v.letter.push_back(cand.i);
                v.level.push_back(v.level[cand.b] + 1);
                for (int j = 0; j < n; ++j) {
                    eimg[j].push_back(images[p][j]);
                    fimg[j].emplace_back();
                }
                new_index.push_back(idx);
                next.push_back(idx);
            }
            for (int c = 0; c < nc; ++c) {
                SVec f;
                for (std::size_t r = 0; r < pivots.size(); ++r)
                    if (!red(static_cast<int>(r), c).is_zero()) f[new_index[r]] = red(static_cast<int>(r), c);
                fimg[cands[c].i][cands[c].b] = std::move(f);
            }
            // ⟨F_i b, y⟩ = q^{-(α_i, wt y)} ⟨b, E_i y⟩
            for (std::size_t r = 0; r < new_index.size(); ++r) {
                const int c = new_index[r];
                const int b = v.parent[c];
                const int i = v.letter[c];
                const Scalar k = rd.q_pow(rd.simple_root(i), lam).inverse();
                for (int y : new_index) {
                    Scalar s;
                    for (const auto& [t, x] : eimg[i][y]) {
                        auto it = gram.find({b, t});
                        if (it != gram.end()) s += x * it->second;
                    }
                    s *= k;
                    if (!s.is_zero()) gram[{c, y}] = s;
                }
            }
        }
        current = std::move(next);
    }

    const int dim = static_cast<int>(wts.size());
    Module& m = v.module;
    m.rd = rdp;
    m.weights = wts;
    for (int j = 0; j < n; ++j) {
        SMat e(dim, dim), f(dim, dim);
        for (int b = 0; b < dim; ++b) {
            e.set_column(b, eimg[j][b]);
            f.set_column(b, fimg[j][b]);
        }
        m.E.push_back(std::move(e));
        m.F.push_back(std::move(f));
    }
    SMat g(dim, dim);
    for (const auto& [ij, x] : gram) g.add(ij.first, ij.second, x);
    m.gram = std::move(g);
    m.label = "V" + mu.str();
    return v;
}

std::vector<std::map<int, Scalar>> embed_irrep(const Irrep& v, const Module& m, const std::map<int, Scalar>& x) {
    std::vector<std::map<int, Scalar>> cols(v.dim());
    cols[0] = x;
    for (int b = 1; b < v.dim(); ++b) cols[b] = m.F[v.letter[b]].apply(cols[v.parent[b]]);
    return cols;
}

}  // namespace cqg
