#include "cqg/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace cqg {

namespace {

IntMatrix identity(int n) {
    IntMatrix m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Gauss-Jordan inverse over Q; empty result if singular.
std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return {};
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational rational_det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

}  // namespace

IntMatrix cartan_matrix(char series, int n) {
    series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    auto chain = [](int k) {
        IntMatrix a = identity(k);
        for (int i = 0; i < k; ++i) {
            a[i][i] = 2;
            if (i + 1 < k) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return a;
    };
    switch (series) {
        case 'A':
            if (n < 1) break;
            return chain(n);
        case 'B': {
            if (n < 2) break;
            IntMatrix a = chain(n);
            a[n - 1][n - 2] = -2;
            return a;
        }
        case 'C': {
            if (n < 2) break;
            IntMatrix a = chain(n);
            a[n - 2][n - 1] = -2;
            return a;
        }
        case 'D': {
            if (n < 3) break;
            IntMatrix a = chain(n - 1);
            for (auto& row : a) row.push_back(0);
            a.push_back(std::vector<long>(n, 0));
            a[n - 1][n - 1] = 2;
            a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
            return a;
        }
        case 'E': {
            if (n < 6 || n > 8) break;
            IntMatrix a = identity(n);
            for (int i = 0; i < n; ++i) a[i][i] = 2;
            std::vector<std::pair<int, int>> edges = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
            if (n >= 7) edges.emplace_back(5, 6);
            if (n >= 8) edges.emplace_back(6, 7);
            for (auto [i, j] : edges) a[i][j] = a[j][i] = -1;
            return a;
        }
        case 'F': {
            if (n != 4) break;
            IntMatrix a = chain(4);
            a[2][1] = -2;
            return a;
        }
        case 'G': {
            if (n != 2) break;
            return {{2, -3}, {-1, 2}};
        }
        default:
            break;
    }
    throw RootDatumError(std::string("unsupported series/rank: ") + series + std::to_string(n));
}

RootDatum RootDatum::from_series(const std::string& spec) {
    if (spec.size() < 2 || !std::isalpha(static_cast<unsigned char>(spec[0])))
        throw RootDatumError("bad algebra spec '" + spec + "'");
    for (std::size_t i = 1; i < spec.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(spec[i]))) throw RootDatumError("bad algebra spec '" + spec + "'");
    int n = std::stoi(spec.substr(1));
    std::string label = spec;
    label[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    return from_cartan(cartan_matrix(spec[0], n), label);
}

RootDatum RootDatum::from_cartan(const IntMatrix& cartan, std::string label) {
    const int n = static_cast<int>(cartan.size());
    if (n == 0) throw RootDatumError("empty Cartan matrix");
    for (const auto& row : cartan)
        if (static_cast<int>(row.size()) != n) throw RootDatumError("Cartan matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && cartan[i][j] != 2) throw RootDatumError("diagonal Cartan entries must be 2");
            if (i != j && cartan[i][j] > 0) throw RootDatumError("off-diagonal Cartan entries must be <= 0");
            if (i != j && ((cartan[i][j] == 0) != (cartan[j][i] == 0)))
                throw RootDatumError("Cartan matrix zero pattern is not symmetric");
        }
    RootDatum rd;
    rd.label_ = std::move(label);
    rd.cartan_ = cartan;

    // symmetrizers per connected component
    std::vector<Rational> d(n, 0);
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        d[s] = 1;
        comp[s] = ncomp;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (j == i || cartan[i][j] == 0) continue;
                Rational dj = d[i] * Rational(cartan[i][j]) / Rational(cartan[j][i]);
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw RootDatumError("Cartan matrix is not symmetrizable");
                }
            }
        }
        ++ncomp;
    }
    rd.d_.assign(n, 0);
    for (int c = 0; c < ncomp; ++c) {
        Rational lo;
        bool first = true;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c && (first || d[i] < lo)) {
                lo = d[i];
                first = false;
            }
        mpz_class den = 1;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) {
                d[i] /= lo;
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d[i].get_den_mpz_t());
            }
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) {
                Rational x = d[i] * den;
                rd.d_[i] = x.get_num().get_si();
            }
        long g = 0;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) g = std::gcd(g, rd.d_[i]);
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) rd.d_[i] /= g;
    }

    // positive definiteness of D·A
    std::vector<std::vector<Rational>> sym(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym[i][j] = Rational(rd.d_[i] * cartan[i][j]);
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = sym[i][j];
        if (rational_det(minor) <= 0) throw RootDatumError("Cartan matrix is not of finite type");
    }

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(cartan[i][j]);
    auto inv = rational_inverse(a);
    rd.form_.assign(n, std::vector<Rational>(n));
    mpz_class L = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rd.form_[i][j] = Rational(rd.d_[i]) * inv[i][j];
            rd.form_[i][j].canonicalize();
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), rd.form_[i][j].get_den_mpz_t());
        }
    rd.L_ = static_cast<int>(L.get_si());
    rd.finish();
    return rd;
}

void RootDatum::finish() {
    const int n = rank();
    // positive roots in simple-root coordinates
    std::set<std::vector<long>> seen;
    std::deque<std::vector<long>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            long pair = 0;
            for (int j = 0; j < n; ++j) pair += beta[j] * cartan_[i][j];
            auto g = beta;
            g[i] -= pair;
            bool positive = std::all_of(g.begin(), g.end(), [](long x) { return x >= 0; }) &&
                            std::any_of(g.begin(), g.end(), [](long x) { return x > 0; });
            if (positive && seen.insert(g).second) queue.push_back(g);
        }
    }
    std::vector<std::vector<long>> roots(seen.begin(), seen.end());
    std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        long hx = std::accumulate(x.begin(), x.end(), 0L);
        long hy = std::accumulate(y.begin(), y.end(), 0L);
        if (hx != hy) return hx < hy;
        return x > y;
    });
    pos_roots_simple_ = roots;
    pos_roots_.clear();
    for (const auto& beta : roots) {
        Weight w(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) w[k] += cartan_[k][j] * beta[j];
        pos_roots_.push_back(w);
    }

    // Weyl group by BFS on action matrices
    std::vector<IntMatrix> gens;
    for (int i = 0; i < n; ++i) {
        IntMatrix s = identity(n);
        for (int k = 0; k < n; ++k) s[k][i] -= cartan_[k][i];
        gens.push_back(s);
    }
    weyl_.clear();
    weyl_index_.clear();
    WeylElement e;
    e.action = identity(n);
    weyl_.push_back(e);
    weyl_index_[e.action] = 0;
    for (std::size_t head = 0; head < weyl_.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            IntMatrix m = matmul(gens[i], weyl_[head].action);
            if (weyl_index_.count(m)) continue;
            if (weyl_.size() >= kWeylGroupCap) {
                weyl_too_large_ = true;
                weyl_.clear();
                weyl_index_.clear();
                return;
            }
            WeylElement w;
            w.word.push_back(i);
            w.word.insert(w.word.end(), weyl_[head].word.begin(), weyl_[head].word.end());
            w.length = weyl_[head].length + 1;
            w.action = std::move(m);
            weyl_index_[w.action] = weyl_.size();
            weyl_.push_back(std::move(w));
        }
    }
    longest_ = weyl_.size() - 1;
}

Weight RootDatum::fundamental(int i) const {
    Weight w = zero();
    w[i] = 1;
    return w;
}

Weight RootDatum::simple_root(int i) const {
    Weight w = zero();
    for (int k = 0; k < rank(); ++k) w[k] = cartan_[k][i];
    return w;
}

Weight RootDatum::rho() const {
    Weight w = zero();
    for (auto& x : w.c) x = 1;
    return w;
}

Rational RootDatum::pairing(const Weight& x, const Weight& y) const {
    Rational s = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (y[j] != 0) s += form_[i][j] * (x[i] * y[j]);
    }
    return s;
}

long RootDatum::v_exponent(const Weight& x, const Weight& y) const {
    Rational e = pairing(x, y) * L_;
    e.canonicalize();
    if (e.get_den() != 1) throw ExponentError("non-integral v exponent");
    return e.get_num().get_si();
}

Scalar RootDatum::q_pow(const Weight& x, const Weight& y) const { return Scalar::v_power(v_exponent(x, y)); }

const std::vector<WeylElement>& RootDatum::weyl_group() const {
    if (weyl_too_large_) throw RootDatumError("Weyl group of " + label_ + " exceeds the enumeration cap");
    return weyl_;
}

Weight RootDatum::act(const WeylElement& w, const Weight& x) const {
    Weight r = zero();
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) r[i] += w.action[i][j] * x[j];
    return r;
}

Weight RootDatum::shifted_action(const WeylElement& w, const Weight& x) const {
    return act(w, x + rho()) - rho();
}

const WeylElement& RootDatum::longest_element() const { return weyl_group().at(longest_); }

Weight RootDatum::dual_weight(const Weight& x) const { return -act(longest_element(), x); }

std::size_t RootDatum::index_of(const IntMatrix& action) const {
    auto it = weyl_index_.find(action);
    if (it == weyl_index_.end()) throw RootDatumError("matrix is not a Weyl group element");
    return it->second;
}

std::size_t RootDatum::compose(std::size_t w1, std::size_t w2) const {
    const auto& W = weyl_group();
    return index_of(matmul(W.at(w1).action, W.at(w2).action));
}

}  // namespace cqg
