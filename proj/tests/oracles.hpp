#pragma once

// Independent reference computations used by the tests. They rely only on the
// Cartan matrix and the bilinear form, never on the module constructions.

#include "cqg/rootdata.hpp"

#include <map>

namespace oracle {

using cqg::Rational;
using cqg::RootDatum;
using cqg::Weight;

// Weyl dimension formula.
inline Rational weyl_dimension(const RootDatum& rd, const Weight& lambda) {
    const Weight rho = rd.rho();
    Rational d = 1;
    for (const auto& a : rd.positive_roots()) d *= rd.pairing(lambda + rho, a) / rd.pairing(rho, a);
    return d;
}

// Weight multiplicities by Freudenthal's recursion.
inline std::map<Weight, long> freudenthal(const RootDatum& rd, const Weight& lambda) {
    const Weight rho = rd.rho();
    const Rational top = rd.pairing(lambda + rho, lambda + rho);
    std::map<Weight, long> mult{{lambda, 1}};
    std::vector<Weight> layer{lambda};
    while (!layer.empty()) {
        std::map<Weight, bool> cand;
        for (const auto& w : layer)
            for (int i = 0; i < rd.rank(); ++i) cand[w - rd.simple_root(i)] = true;
        std::vector<Weight> next;
        for (const auto& [mu, _] : cand) {
            if (mult.count(mu)) continue;
            Rational denom = top - rd.pairing(mu + rho, mu + rho);
            if (denom == 0) continue;
            Rational s = 0;
            for (const auto& a : rd.positive_roots()) {
                for (long k = 1; rd.pairing(mu + k * a, rho) <= rd.pairing(lambda, rho); ++k) {
                    auto it = mult.find(mu + k * a);
                    if (it != mult.end()) s += Rational(it->second) * rd.pairing(it->first, a);
                }
            }
            Rational m = 2 * s / denom;
            if (m != 0) {
                if (m.get_den() != 1) throw std::logic_error("freudenthal: non-integral multiplicity");
                mult[mu] = m.get_num().get_si();
                next.push_back(mu);
            }
        }
        layer = std::move(next);
    }
    return mult;
}

// Multiplicities of V(a) ⊗ V(b) by peeling dominant characters.
inline std::map<Weight, long> tensor_multiplicities(const RootDatum& rd, const Weight& a, const Weight& b) {
    std::map<Weight, long> ch;
    auto ma = freudenthal(rd, a), mb = freudenthal(rd, b);
    for (const auto& [x, m] : ma)
        for (const auto& [y, n] : mb) ch[x + y] += m * n;
    std::map<Weight, long> out;
    auto height = [&](const Weight& w) { return rd.pairing(w, rd.rho()); };
    while (true) {
        const Weight* best = nullptr;
        for (const auto& [w, m] : ch)
            if (m != 0 && w.is_dominant() && (!best || height(w) > height(*best))) best = &w;
        if (!best) break;
        Weight hw = *best;
        long m = ch[hw];
        out[hw] = m;
        for (const auto& [w, k] : freudenthal(rd, hw)) ch[w] -= m * k;
    }
    return out;
}

}  // namespace oracle
