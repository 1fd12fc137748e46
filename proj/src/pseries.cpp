#include "cqg/pseries.hpp"

namespace cqg {

std::string DoubleSym::str() const {
    return "u[" + beta.str() + ";" + std::to_string(i) + "," + std::to_string(j) + "]⊗w[" + gamma.str() + ";" +
           std::to_string(k) + "," + std::to_string(l) + "]";
}

std::vector<std::pair<int, int>> PrincipalSeries::block_indices(const Weight& eta) const {
    std::vector<std::pair<int, int>> out;
    const Weight target = kBlockSign * mu_;
    const int n = o_.dim(eta);
    for (int b = 0; b < n; ++b)
        if (o_.weight(eta, b) == target)
            for (int a = 0; a < n; ++a) out.emplace_back(a, b);
    return out;
}

CoeffElem PrincipalSeries::basis_vector(const Weight& eta, int a, int b) {
    return o_.symbol_antipode(CoeffSym{eta, b, a}, -1);
}

Scalar PrincipalSeries::dual_functional(const Weight& eta, int a, int b, const CoeffElem& xi) {
    const Scalar pre = o_.k_pair(2 * o_.rd().rho(), eta, a) * o_.algebra().qdim(eta);
    return pre * o_.haar_product(CoeffElem(CoeffSym{eta, a, b}), xi);
}

CoeffElem PrincipalSeries::act_dual(const DualElem& x, const CoeffElem& xi) {
    // x · u_ab = Σ_c (Ŝx, u_ac) u_cb
    const DualElem sx = o_.dual_antipode(x, 1);
    CoeffElem out;
    for (const auto& [s, c] : xi.terms)
        for (const auto& [d, w] : sx.terms)
            if (d.gamma == s.nu && d.k == s.a) out.add(CoeffSym{s.nu, d.l, s.b}, c * w);
    return out;
}

CoeffElem PrincipalSeries::act_function(const CoeffElem& f, const CoeffElem& xi) {
    // u_ab · ξ = Σ_c q^{(2ρ+λ, ε_c)} u_ac ξ S(u_cb)
    const Weight shift = 2 * o_.rd().rho() + lambda_;
    CoeffElem out;
    for (const auto& [s, coef] : f.terms) {
        const int n = o_.dim(s.nu);
        for (int c = 0; c < n; ++c) {
            const Scalar k = o_.k_pair(shift, s.nu, c);
            CoeffElem left = o_.product(CoeffElem(CoeffSym{s.nu, s.a, c}), xi);
            out.add(o_.product(left, o_.symbol_antipode(CoeffSym{s.nu, c, s.b}, 1)), coef * k);
        }
    }
    return out;
}

CoeffElem PrincipalSeries::act(const DoubleElem& x, const CoeffElem& xi) {
    CoeffElem out;
    for (const auto& t : x) out.add(act_dual(t.x, act_function(t.g, xi)));
    return out;
}

CoeffElem PrincipalSeries::duflo_moore_pow(const CoeffElem& xi, int n) const {
    if (n % 2 != 0) throw std::invalid_argument("odd powers of the Duflo-Moore operator are not supported");
    if (n == 0) return xi;
    // (K_{nρ}, u_ac) u_cb = q^{n(ρ, ε_a)} u_ab
    const Weight k = static_cast<long>(n) * o_.rd().rho();
    CoeffElem out;
    for (const auto& [s, c] : xi.terms) out.add(s, c * o_.k_pair(k, s.nu, s.a));
    return out;
}

std::set<Weight> PrincipalSeries::support(const DoubleElem& x) const {
    std::set<Weight> out;
    for (const auto& t : x)
        for (const auto& [d, c] : t.x.terms) out.insert(d.gamma);
    return out;
}

FourierPoly twisted_character_closed(OKq& o, const DoubleSym& f, const Weight& mu) {
    const RootDatum& rd = o.rd();
    const Scalar pre = rd.q_pow(-2 * rd.rho(), mu) * o.algebra().qdim(f.gamma);
    FourierPoly out;
    const int nb = o.dim(f.beta), ng = o.dim(f.gamma);
    for (int m = 0; m < nb; ++m) {
        if (!(o.weight(f.beta, m) == mu)) continue;
        const CoeffElem s_mj = o.symbol_antipode(CoeffSym{f.beta, m, f.j}, -1);
        const CoeffElem u_im(CoeffSym{f.beta, f.i, m});
        for (int r = 0; r < ng; ++r) {
            const CoeffElem u_lr(CoeffSym{f.gamma, f.l, r});
            const CoeffElem s_rk = o.symbol_antipode(CoeffSym{f.gamma, r, f.k}, -1);
            const Scalar val = o.haar_word({u_lr, s_mj, s_rk, u_im});
            if (!val.is_zero()) out.add(-o.weight(f.gamma, r), pre * val);
        }
    }
    return out;
}

FourierPoly twisted_character_explicit(OKq& o, const DoubleSym& f, const Weight& mu, int d_power) {
    const RootDatum& rd = o.rd();
    if (d_power % 2 != 0) throw std::invalid_argument("odd powers of the Duflo-Moore operator are not supported");
    const Weight two_rho = 2 * rd.rho();
    const Scalar qd = o.algebra().qdim(f.gamma);
    // D^{d} u_in = q^{d(ρ, ε_i)} u_in
    const Scalar dfac = o.k_pair(static_cast<long>(d_power) * rd.rho(), f.beta, f.i);
    const Scalar lfac = o.k_pair(-two_rho, f.gamma, f.l);
    FourierPoly out;
    const int nb = o.dim(f.beta), ng = o.dim(f.gamma);
    for (int n = 0; n < nb; ++n) {
        if (!(o.weight(f.beta, n) == mu)) continue;
        const CoeffElem s_in = o.symbol_antipode(CoeffSym{f.beta, f.i, n}, -1);
        const CoeffElem u_nj(CoeffSym{f.beta, n, f.j});
        for (int r = 0; r < ng; ++r) {
            const CoeffElem s_lr = o.symbol_antipode(CoeffSym{f.gamma, f.l, r}, 1);
            const CoeffElem u_rk(CoeffSym{f.gamma, r, f.k});
            const Scalar val = o.haar_word({s_lr, s_in, u_rk, u_nj});
            if (val.is_zero()) continue;
            out.add(-o.weight(f.gamma, r), qd * dfac * lfac * o.k_pair(-two_rho, f.gamma, r) * val);
        }
    }
    return out;
}

Scalar twisted_character_oracle(OKq& o, const DoubleSym& f, const Weight& mu, const Weight& lambda) {
    const RootDatum& rd = o.rd();
    PrincipalSeries ps(o, mu, lambda);
    const Weight two_rho = 2 * rd.rho();
    const Scalar qd = o.algebra().qdim(f.gamma);
    const int nb = o.dim(f.beta), ng = o.dim(f.gamma);
    auto pi_f = [&](const CoeffElem& xi) {
        const CoeffElem s_xi = o.antipode(xi, -1);
        CoeffElem out;
        for (int m = 0; m < nb; ++m) {
            if (!(o.weight(f.beta, m) == mu)) continue;
            const CoeffElem u_mj(CoeffSym{f.beta, m, f.j});
            Scalar coef;
            for (int r = 0; r < ng; ++r) {
                const CoeffElem s_lr = o.symbol_antipode(CoeffSym{f.gamma, f.l, r}, 1);
                const CoeffElem u_rk(CoeffSym{f.gamma, r, f.k});
                const Scalar val = o.haar_word({s_lr, s_xi, u_rk, u_mj});
                if (val.is_zero()) continue;
                const Weight& er = o.weight(f.gamma, r);
                coef += val * o.k_pair(-two_rho, f.gamma, f.l) * rd.q_pow(-two_rho - lambda, er);
            }
            out.add(CoeffSym{f.beta, f.i, m}, qd * coef);
        }
        return out;
    };
    // the image lies in span{u^β}, whose block label is β†
    const std::set<Weight> block{o.algebra().dual_weight(f.beta)};
    return ps.trace(block, [&](const CoeffElem& xi) { return pi_f(ps.duflo_moore_pow(xi, -2)); });
}

DoubleElem hopf_element(OKq& o, const DoubleSym& f) {
    const Scalar pre = o.k_pair(-2 * o.rd().rho(), f.gamma, f.l);
    DualElem w = o.dual_antipode(DualElem(DualSym{f.gamma, f.k, f.l}), -2).scaled(pre);
    return {DoubleTerm{std::move(w), o.symbol_antipode(CoeffSym{f.beta, f.i, f.j}, -1)}};
}

Scalar trace_general(OKq& o, const DoubleElem& x, const WeylElement& w) {
    const RootDatum& rd = o.rd();
    const Weight w0 = rd.shifted_action(w, rd.zero());
    PrincipalSeries ps(o, -w0, -w0 - 2 * rd.rho());
    return ps.trace(ps.support(x), [&](const CoeffElem& xi) { return ps.act(x, xi); });
}

Scalar double_counit(OKq& o, const DoubleElem& x) {
    Scalar e;
    for (const auto& t : x) e += OKq::pair_dual(t.x, o.unit()) * o.counit(t.g);
    return e;
}

}  // namespace cqg
