#include "cqg/okq.hpp"

#include <mutex>

namespace cqg {

std::string CoeffSym::str() const { return "u[" + nu.str() + ";" + std::to_string(a) + "," + std::to_string(b) + "]"; }
std::string DualSym::str() const { return "w[" + gamma.str() + ";" + std::to_string(k) + "," + std::to_string(l) + "]"; }

CoeffElem OKq::coeff(const Weight& nu, int a, int b) const {
    const int d = alg_->irrep(nu)->dim();
    if (a < 0 || b < 0 || a >= d || b >= d) throw std::out_of_range("coefficient index out of range for V" + nu.str());
    return CoeffElem(CoeffSym{nu, a, b});
}

const Weight& OKq::weight(const Weight& nu, int a) const { return alg_->irrep(nu)->weight(a); }

Scalar OKq::k_pair(const Weight& lambda, const Weight& nu, int a) const { return rd().q_pow(lambda, weight(nu, a)); }

CoeffElem OKq::symbol_product(const CoeffSym& x, const CoeffSym& y) {
    const auto key = std::make_pair(x, y);
    {
        std::shared_lock lock(mu_);
        auto it = products_.find(key);
        if (it != products_.end()) return it->second;
    }
    // (X, u^ν_ab u^η_cd) = (ρ_η ⊗ ρ_ν)(ΔX) at ((c,a),(d,b))
    auto dec = alg_->product_decomposition(y.nu, x.nu);
    const int dn = dim(x.nu);
    const int r = y.a * dn + x.a;
    const int s = y.b * dn + x.b;
    CoeffElem out;
    const auto& row = dec->phi_t.column(r);
    const auto& col = dec->phi_inv.column(s);
    for (const auto& [c1, p1] : row)
        for (const auto& [c2, p2] : col) {
            if (dec->col_comp[c1] != dec->col_comp[c2] || dec->col_copy[c1] != dec->col_copy[c2]) continue;
            const Weight& lam = dec->components[dec->col_comp[c1]].highest;
            out.add(CoeffSym{lam, dec->col_index[c1], dec->col_index[c2]}, p1 * p2);
        }
    std::unique_lock lock(mu_);
    products_.emplace(key, out);
    return out;
}

CoeffElem OKq::product(const CoeffElem& x, const CoeffElem& y) {
    CoeffElem out;
    for (const auto& [s, a] : x.terms)
        for (const auto& [t, b] : y.terms) out.add(symbol_product(s, t), a * b);
    return out;
}

CoeffElem OKq::product(const std::vector<CoeffElem>& factors) {
    CoeffElem acc = unit();
    for (const auto& f : factors) acc = product(acc, f);
    return acc;
}

Scalar OKq::haar_product(const CoeffElem& x, const CoeffElem& y) {
    Scalar total;
    const Weight zero = rd().zero();
    for (const auto& [s, a] : x.terms)
        for (const auto& [t, b] : y.terms) {
            if (alg_->dual_weight(s.nu) != t.nu) continue;  // V(η) ⊗ V(ν) contains V(0) only for η = ν†
            auto dec = alg_->product_decomposition(t.nu, s.nu);
            const int dn = dim(s.nu);
            const int r = t.a * dn + s.a;
            const int c = t.b * dn + s.b;
            const auto& row = dec->phi_t.column(r);
            const auto& col = dec->phi_inv.column(c);
            for (const auto& [c1, p1] : row) {
                if (!(dec->components[dec->col_comp[c1]].highest == zero)) continue;
                for (const auto& [c2, p2] : col)
                    if (c1 == c2) total += a * b * p1 * p2;
            }
        }
    return total;
}

Scalar OKq::haar_word(const std::vector<CoeffElem>& factors) {
    if (factors.empty()) return Scalar(1);
    if (factors.size() == 1) return haar(factors[0]);
    CoeffElem acc = factors[0];
    for (std::size_t k = 1; k + 1 < factors.size(); ++k) acc = product(acc, factors[k]);
    return haar_product(acc, factors.back());
}

CoeffElem OKq::symbol_antipode(const CoeffSym& s, int power) {
    if (power == 0) return CoeffElem(s);
    const auto key = std::make_pair(s, power);
    {
        std::shared_lock lock(mu_);
        auto it = antipodes_.find(key);
        if (it != antipodes_.end()) return it->second;
    }
    CoeffElem out;
    if (power == 1 || power == -1) {
        // (X, S^{-1} u_ab) = ρ(ŜX)_ab = ρ*(X)_ba with ρ* ≅ ι ρ_{ν†} ι^{-1}
        auto iso = alg_->antipode_iso(s.nu, power == -1 ? Twist::S : Twist::Sinv);
        const SMat iota_t = iso->iota.transpose();
        for (const auto& [p, x] : iota_t.column(s.b))
            for (const auto& [q, y] : iso->iota_inv.column(s.a)) out.add(CoeffSym{iso->source, p, q}, x * y);
    } else {
        const int step = power > 0 ? 1 : -1;
        out = antipode(symbol_antipode(s, step), power - step);
    }
    std::unique_lock lock(mu_);
    antipodes_.emplace(key, out);
    return out;
}

CoeffElem OKq::antipode(const CoeffElem& x, int power) {
    CoeffElem out;
    for (const auto& [s, a] : x.terms) out.add(symbol_antipode(s, power), a);
    return out;
}

Scalar OKq::counit(const CoeffElem& x) const {
    Scalar e;
    for (const auto& [s, a] : x.terms)
        if (s.a == s.b) e += a;
    return e;
}

CoeffTensor OKq::coproduct(const CoeffElem& x) const {
    CoeffTensor out;
    for (const auto& [s, a] : x.terms) {
        const int d = alg_->irrep(s.nu)->dim();
        for (int c = 0; c < d; ++c) out.emplace(std::make_pair(CoeffSym{s.nu, s.a, c}, CoeffSym{s.nu, c, s.b}), a);
    }
    return out;
}

Scalar OKq::pair_uq(const UqWord& X, const CoeffElem& x) {
    Scalar total;
    for (const auto& [s, c] : x.terms) {
        auto v = alg_->irrep(s.nu);
        const Module& m = v->module;
        std::map<int, Scalar> vec{{s.b, Scalar(1)}};
        for (auto it = X.rbegin(); it != X.rend(); ++it) {
            switch (it->kind) {
                case UqLetter::E: vec = m.E.at(it->i).apply(vec); break;
                case UqLetter::F: vec = m.F.at(it->i).apply(vec); break;
                case UqLetter::K:
                    for (auto& [r, y] : vec) y *= rd().q_pow(it->lambda, m.weights[r]);
                    break;
            }
        }
        auto hit = vec.find(s.a);
        if (hit != vec.end()) total += c * hit->second;
    }
    return total;
}

Scalar OKq::pair_dual(const DualElem& w, const CoeffElem& x) {
    Scalar total;
    for (const auto& [d, a] : w.terms) {
        auto it = x.terms.find(CoeffSym{d.gamma, d.k, d.l});
        if (it != x.terms.end()) total += a * it->second;
    }
    return total;
}

DualElem OKq::dual_antipode(const DualElem& w, int power) {
    if (power == 0) return w;
    DualElem out;
    for (const auto& [d, c] : w.terms) {
        // Ŝ^p ω = Σ (ω, S^{-p} u') ω'
        const Weight target = (power % 2) ? alg_->dual_weight(d.gamma) : d.gamma;
        const int n = dim(target);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Scalar x = symbol_antipode(CoeffSym{target, a, b}, -power).coeff(CoeffSym{d.gamma, d.k, d.l});
                if (!x.is_zero()) out.add(DualSym{target, a, b}, c * x);
            }
    }
    return out;
}

}  // namespace cqg
