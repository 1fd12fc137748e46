#include "cqg/fourier.hpp"

namespace cqg {

FourierPoly FourierPoly::constant(const Scalar& c, std::size_t rank) {
    FourierPoly p;
    p.add(Weight(rank), c);
    return p;
}

FourierPoly FourierPoly::monomial(const Weight& w, const Scalar& c) {
    FourierPoly p;
    p.add(w, c);
    return p;
}

Scalar FourierPoly::coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void FourierPoly::add(const Weight& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FourierPoly operator-(const FourierPoly& a, const FourierPoly& b) {
    FourierPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
}

FourierPoly FourierPoly::scaled(const Scalar& c) const {
    FourierPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
    return r;
}

FourierPoly FourierPoly::conjugate() const {
    FourierPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(-w, c);
    return r;
}

FourierPoly fourier_mul(const FourierPoly& a, const FourierPoly& b) {
    FourierPoly r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add(wa + wb, ca * cb);
    return r;
}

Scalar fourier_integrate(const FourierPoly& p) {
    if (p.is_zero()) return Scalar();
    const auto& first = p.terms().begin()->first;
    return p.coeff(Weight(first.size()));
}

Scalar fourier_specialize(const FourierPoly& p, const RootDatum& rd, const Weight& x) {
    Scalar s;
    for (const auto& [w, c] : p.terms()) s += c * rd.q_pow(x, w);
    return s;
}

Complex eval_fourier_numeric(const FourierPoly& p, const RootDatum& rd, const NumericContext& ctx) {
    const int n = rd.rank();
    if (static_cast<int>(ctx.nu().size()) != n) throw std::invalid_argument("torus point has wrong dimension");
    Complex total;
    for (const auto& [w, c] : p.terms()) {
        Real pair = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (w[j] == 0) continue;
                const auto& f = rd.form()[i][j];
                pair += ctx.nu()[i] * Real(f.get_num().get_mpz_t()) / Real(f.get_den().get_mpz_t()) * w[j];
            }
        total += Complex(eval_numeric(c, rd.L(), ctx)) * expi(ctx.h() * pair);
    }
    return total;
}

}  // namespace cqg
