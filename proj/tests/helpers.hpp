#pragma once

// Shared generators and word manipulations for the O(K_q) tests.

#include "cqg/okq.hpp"

#include <random>

namespace testing_support {

using namespace cqg;

// Dominant weights with dim V ≤ bound, enumerated by coordinate sum.
inline std::vector<Weight> small_dominant(Algebra& alg, int max_dim, int max_sum = 6) {
    std::vector<Weight> out;
    const int n = alg.rd().rank();
    std::vector<long> c(n, 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == n) {
            Weight w(c);
            if (alg.irrep(w)->dim() <= max_dim) out.push_back(w);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            c[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, max_sum);
    return out;
}

inline CoeffSym random_symbol(OKq& o, const std::vector<Weight>& pool, std::mt19937& rng) {
    const Weight& nu = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    std::uniform_int_distribution<int> idx(0, o.dim(nu) - 1);
    return CoeffSym{nu, idx(rng), idx(rng)};
}

inline CoeffElem random_elem(OKq& o, const std::vector<Weight>& pool, std::mt19937& rng, int terms = 2) {
    CoeffElem x;
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < terms; ++t) {
        int k = c(rng);
        x.add(random_symbol(o, pool, rng), Scalar(k == 0 ? 1 : k) * Scalar::v_power(c(rng)));
    }
    return x;
}

inline UqWord random_word(const RootDatum& rd, std::mt19937& rng, int len) {
    UqWord w;
    std::uniform_int_distribution<int> kind(0, 2), gen(0, rd.rank() - 1), coord(-2, 2);
    for (int t = 0; t < len; ++t) {
        switch (kind(rng)) {
            case 0: w.push_back(UqLetter::e(gen(rng))); break;
            case 1: w.push_back(UqLetter::f(gen(rng))); break;
            default: {
                Weight l(static_cast<std::size_t>(rd.rank()));
                for (int i = 0; i < rd.rank(); ++i) l.c[i] = coord(rng);
                w.push_back(UqLetter::k(l));
            }
        }
    }
    return w;
}

// ΔX as a list of (coefficient sign, X_(1), X_(2)); Δ is multiplicative.
struct WordPair {
    UqWord first, second;
};
inline std::vector<WordPair> word_coproduct(const RootDatum& rd, const UqWord& X) {
    std::vector<WordPair> acc{{}};
    for (const auto& l : X) {
        std::vector<WordPair> next;
        for (const auto& p : acc) {
            auto push = [&](UqLetter a, UqLetter b) {
                WordPair q = p;
                q.first.push_back(a);
                q.second.push_back(b);
                next.push_back(std::move(q));
            };
            const Weight zero = rd.zero();
            switch (l.kind) {
                case UqLetter::E:
                    push(l, UqLetter::k(rd.simple_root(l.i)));
                    push(UqLetter::k(zero), l);
                    break;
                case UqLetter::F:
                    push(l, UqLetter::k(zero));
                    push(UqLetter::k(-rd.simple_root(l.i)), l);
                    break;
                case UqLetter::K: push(l, l); break;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

// Ŝ^{±1}(X) as a signed word.
inline std::pair<int, UqWord> word_antipode(const RootDatum& rd, const UqWord& X, bool inverse) {
    int sign = 1;
    UqWord out;
    for (auto it = X.rbegin(); it != X.rend(); ++it) {
        const auto& l = *it;
        switch (l.kind) {
            case UqLetter::K: out.push_back(UqLetter::k(-l.lambda)); break;
            case UqLetter::E:
                sign = -sign;
                if (!inverse) {  // −E K^{-1}
                    out.push_back(l);
                    out.push_back(UqLetter::k(-rd.simple_root(l.i)));
                } else {  // −K^{-1} E
                    out.push_back(UqLetter::k(-rd.simple_root(l.i)));
                    out.push_back(l);
                }
                break;
            case UqLetter::F:
                sign = -sign;
                if (!inverse) {  // −K F
                    out.push_back(UqLetter::k(rd.simple_root(l.i)));
                    out.push_back(l);
                } else {  // −F K
                    out.push_back(l);
                    out.push_back(UqLetter::k(rd.simple_root(l.i)));
                }
                break;
        }
    }
    return {sign, out};
}

}  // namespace testing_support
