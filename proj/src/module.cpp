#include "cqg/module.hpp"

#include <sstream>
#include <unordered_map>

namespace cqg {

namespace {

Scalar qi_diff(const RootDatum& rd, int i) {
    Scalar a = Scalar::v_power(static_cast<long>(rd.L()) * rd.d(i));
    return a - a.inverse();
}

std::vector<Scalar> inverted(std::vector<Scalar> d) {
    for (auto& x : d) x = x.inverse();
    return d;
}

}  // namespace

std::map<Weight, std::vector<int>> Module::weight_blocks() const {
    std::map<Weight, std::vector<int>> b;
    for (int i = 0; i < dim(); ++i) b[weights[i]].push_back(i);
    return b;
}

std::vector<int> Module::block(const Weight& w) const {
    std::vector<int> b;
    for (int i = 0; i < dim(); ++i)
        if (weights[i] == w) b.push_back(i);
    return b;
}

std::vector<Scalar> Module::k_diagonal(const Weight& lambda) const {
    std::vector<Scalar> d;
    d.reserve(weights.size());
    for (const auto& w : weights) d.push_back(rd->q_pow(lambda, w));
    return d;
}

Module trivial_module(const RootDatumPtr& rd) {
    Module m;
    m.rd = rd;
    m.weights = {rd->zero()};
    for (int i = 0; i < rd->rank(); ++i) {
        m.E.emplace_back(1, 1);
        m.F.emplace_back(1, 1);
    }
    m.gram = SMat::identity(1);
    m.label = "V(0)";
    return m;
}

Module tensor(const Module& a, const Module& b) {
    if (a.rd.get() != b.rd.get() && !(a.rd->cartan() == b.rd->cartan()))
        throw std::invalid_argument("tensor: modules over different root data");
    Module t;
    t.rd = a.rd;
    for (const auto& x : a.weights)
        for (const auto& y : b.weights) t.weights.push_back(x + y);
    const auto ia = SMat::identity(a.dim());
    const auto ib = SMat::identity(b.dim());
    for (int i = 0; i < a.rd->rank(); ++i) {
        const Weight al = a.rd->simple_root(i);
        t.E.push_back(kron(a.E[i], b.K(al)) + kron(ia, b.E[i]));
        t.F.push_back(kron(a.F[i], ib) + kron(a.K(-al), b.F[i]));
    }
    if (a.gram && b.gram) t.gram = kron(*a.gram, *b.gram);
    t.label = a.label + "⊗" + b.label;
    return t;
}

Module tensor(const std::vector<const Module*>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor: empty factor list");
    Module t = *factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) t = tensor(t, *factors[k]);
    return t;
}

Module dual_module(const Module& m, Twist twist) {
    Module d;
    d.rd = m.rd;
    for (const auto& w : m.weights) d.weights.push_back(-w);
    for (int i = 0; i < m.rd->rank(); ++i) {
        const Weight al = m.rd->simple_root(i);
        const auto k = m.k_diagonal(al);
        const auto kinv = inverted(k);
        SMat et = m.E[i].transpose().scaled(Scalar(-1));
        SMat ft = m.F[i].transpose().scaled(Scalar(-1));
        if (twist == Twist::S) {
            // ρ(−E K^{-1})ᵀ = −K^{-1} Eᵀ,  ρ(−K F)ᵀ = −Fᵀ K
            d.E.push_back(et.scaled_by(&kinv, nullptr));
            d.F.push_back(ft.scaled_by(nullptr, &k));
        } else {
            // ρ(−K^{-1} E)ᵀ = −Eᵀ K^{-1},  ρ(−F K)ᵀ = −K Fᵀ
            d.E.push_back(et.scaled_by(nullptr, &kinv));
            d.F.push_back(ft.scaled_by(&k, nullptr));
        }
    }
    if (m.gram) {
        // H = K_{±2ρ} G^{-1}, inverted weight block by weight block
        const Weight two_rho = 2 * m.rd->rho();
        const auto c = m.k_diagonal(twist == Twist::S ? two_rho : -two_rho);
        SMat ginv(m.dim(), m.dim());
        for (const auto& [w, idx] : m.weight_blocks()) {
            const int n = static_cast<int>(idx.size());
            DMat g(n, n);
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) g(r, s) = m.gram->get(idx[r], idx[s]);
            DMat gi = inverse(g);
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) ginv.add(idx[r], idx[s], c[idx[r]] * gi(r, s));
        }
        d.gram = std::move(ginv);
    }
    d.label = m.label + (twist == Twist::S ? "*" : "*'");
    return d;
}

std::vector<std::string> relation_failures(const Module& m) {
    std::vector<std::string> out;
    const auto& rd = *m.rd;
    const int n = rd.rank();
    for (int i = 0; i < n; ++i) {
        const Weight al = rd.simple_root(i);
        for (int c = 0; c < m.dim(); ++c) {
            for (const auto& [r, x] : m.E[i].column(c))
                if (m.weights[r] != m.weights[c] + al) {
                    out.push_back("K E_" + std::to_string(i) + " K^-1 weight mismatch");
                    break;
                }
            for (const auto& [r, x] : m.F[i].column(c))
                if (m.weights[r] != m.weights[c] - al) {
                    out.push_back("K F_" + std::to_string(i) + " K^-1 weight mismatch");
                    break;
                }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SMat comm = m.E[i] * m.F[j] - m.F[j] * m.E[i];
            SMat expect(m.dim(), m.dim());
            if (i == j) {
                const Weight al = rd.simple_root(i);
                const Scalar den = qi_diff(rd, i);
                std::vector<Scalar> diag;
                for (const auto& w : m.weights) {
                    Scalar k = rd.q_pow(al, w);
                    diag.push_back((k - k.inverse()) / den);
                }
                expect = SMat::diagonal(diag);
            }
            if (!(comm == expect)) out.push_back("[E_" + std::to_string(i) + ", F_" + std::to_string(j) + "] relation fails");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const long deg = 1 - rd.a(i, j);
            for (int which = 0; which < 2; ++which) {
                const SMat& X = which == 0 ? m.E[i] : m.F[i];
                const SMat& Y = which == 0 ? m.E[j] : m.F[j];
                std::vector<SMat> pw{SMat::identity(m.dim())};
                for (long k = 1; k <= deg; ++k) pw.push_back(pw.back() * X);
                SMat total(m.dim(), m.dim());
                for (long k = 0; k <= deg; ++k) {
                    Scalar coef = qbinomial_base(deg, k, rd.d(i), rd.L());
                    if (k % 2) coef = -coef;
                    total = total + (pw[k] * Y * pw[deg - k]).scaled(coef);
                }
                if (!total.is_zero())
                    out.push_back(std::string(which == 0 ? "E" : "F") + " Serre relation (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") fails");
            }
        }
    return out;
}

std::vector<std::string> gram_failures(const Module& m) {
    std::vector<std::string> out;
    if (!m.gram) {
        out.push_back("module has no Gram form");
        return out;
    }
    const SMat& G = *m.gram;
    if (!(G.transpose() == G)) out.push_back("Gram form is not symmetric");
    for (int i = 0; i < m.rd->rank(); ++i) {
        SMat lhs = m.E[i].transpose() * G;
        SMat rhs = G * m.K(m.rd->simple_root(i)) * m.F[i];
        if (!(lhs == rhs)) out.push_back("Gram invariance fails for E_" + std::to_string(i));
    }
    return out;
}

DMat e_block(const Module& m, int i, const Weight& from) {
    const auto src = m.block(from);
    const auto dst = m.block(from + m.rd->simple_root(i));
    std::unordered_map<int, int> pos;
    for (std::size_t k = 0; k < dst.size(); ++k) pos[dst[k]] = static_cast<int>(k);
    DMat b(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c)
        for (const auto& [r, x] : m.E[i].column(src[c])) b(pos.at(r), static_cast<int>(c)) = x;
    return b;
}

DMat invariant_vectors(const Module& m) {
    const Weight zero = m.rd->zero();
    const auto z = m.block(zero);
    DMat out(m.dim(), 0);
    if (z.empty()) return out;
    std::vector<DMat> up;
    int rows = 0;
    for (int i = 0; i < m.rd->rank(); ++i) {
        up.push_back(e_block(m, i, zero));
        rows += up.back().rows();
    }
    DMat stacked(rows, static_cast<int>(z.size()));
    int r0 = 0;
    for (const auto& u : up) {
        for (int r = 0; r < u.rows(); ++r)
            for (int c = 0; c < u.cols(); ++c) stacked(r0 + r, c) = u(r, c);
        r0 += u.rows();
    }
    DMat k = kernel(stacked);
    out = DMat(m.dim(), k.cols());
    for (int c = 0; c < k.cols(); ++c)
        for (std::size_t r = 0; r < z.size(); ++r) out(z[r], c) = k(static_cast<int>(r), c);
    return out;
}

SMat trivial_projection(const Module& m) {
    const Weight zero = m.rd->zero();
    const auto z = m.block(zero);
    SMat P(m.dim(), m.dim());
    if (z.empty()) return P;
    std::vector<DMat> up, in;
    for (int i = 0; i < m.rd->rank(); ++i) {
        up.push_back(e_block(m, i, zero));
        in.push_back(e_block(m, i, -m.rd->simple_root(i)));
    }
    DMat p0 = trivial_projection_block(up, in, static_cast<int>(z.size()), ExactPolicy{});
    for (std::size_t r = 0; r < z.size(); ++r)
        for (std::size_t c = 0; c < z.size(); ++c)
            P.add(z[r], z[c], p0(static_cast<int>(r), static_cast<int>(c)));
    return P;
}

Scalar trace_k(const Module& m, const Weight& lambda) {
    Scalar s;
    for (const auto& w : m.weights) s += m.rd->q_pow(lambda, w);
    return s;
}

Scalar quantum_dimension(const Module& m) { return trace_k(m, 2 * m.rd->rho()); }

}  // namespace cqg
