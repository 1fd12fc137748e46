#include "cqg/plancherel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <mutex>
#include <thread>

namespace cqg {

namespace {

Real to_real(const Rational& r) { return Real(r.get_num().get_mpz_t()) / Real(r.get_den().get_mpz_t()); }

// (x, ν) for an exact weight x and a real torus point ν in fundamental coordinates
Real pair_real(const RootDatum& rd, const Weight& x, const std::vector<Real>& nu) {
    Real s = 0;
    for (int i = 0; i < rd.rank(); ++i) {
        if (nu[i] == 0) continue;
        for (int j = 0; j < rd.rank(); ++j)
            if (x[j] != 0) s += nu[i] * to_real(rd.form()[i][j]) * x[j];
    }
    return s;
}

// ∏_α |q^{(α,μ+iν)/2} − q^{−(α,μ+iν)/2}|²
Real denominator_product(const RootDatum& rd, const Weight& mu, const std::vector<Real>& nu, const Real& h) {
    Real prod = 1;
    for (const auto& a : rd.positive_roots()) {
        const Real x = h * to_real(rd.pairing(a, mu)) / 2;
        const Real y = h * pair_real(rd, a, nu) / 2;
        Complex t = Complex(exp(x)) * expi(y) - Complex(exp(-x)) * expi(-y);
        prod *= t.norm2();
    }
    return prod;
}

template <class T, class P>
std::vector<T> project_block(const std::vector<Matrix<T>>& up, const std::vector<Matrix<T>>& in, const std::vector<T>& t,
                             const P& policy) {
    const int zdim = static_cast<int>(t.size());
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
    std::vector<T> out(zdim, T(0));
    if (V.cols() == 0) return out;
    Matrix<T> tv(zdim, 1);
    for (int i = 0; i < zdim; ++i) tv(i, 0) = t[i];
    Matrix<T> Wt = W.transpose();
    Matrix<T> c = inverse(Wt * V, policy) * (Wt * tv);
    Matrix<T> p = V * c;
    for (int i = 0; i < zdim; ++i) out[i] = p(i, 0);
    return out;
}

Matrix<Real> evaluate(const DMat& m, int L, const NumericContext& ctx) {
    Matrix<Real> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r(i, j) = eval_numeric(m(i, j), L, ctx);
    return r;
}

std::vector<Weight> distinct_weights(const Irrep& v) {
    std::set<Weight> s(v.module.weights.begin(), v.module.weights.end());
    return {s.begin(), s.end()};
}

}  // namespace

FourierPoly measure_density(const RootDatum& rd, const Weight& mu, bool signs) {
    const auto& W = rd.weyl_group();
    const Rational inv(1, static_cast<long>(W.size()));
    const Weight rho = rd.rho();
    FourierPoly out;
    for (const auto& x : W)
        for (const auto& y : W) {
            const Weight xr = rd.act(x, rho), yr = rd.act(y, rho);
            const int s = signs ? x.sign() * y.sign() : 1;
            out.add(xr - yr, Scalar(inv * s) * rd.q_pow(xr + yr, mu));
        }
    return out;
}

Real weyl_denominator_check(const RootDatum& rd, const Weight& mu, const NumericContext& ctx,
                            const std::vector<std::vector<Real>>& nus) {
    const FourierPoly dens = measure_density(rd, mu);
    const Real order = static_cast<long>(rd.weyl_group().size());
    Real worst = 0;
    for (const auto& nu : nus) {
        NumericContext local(ctx.q(), ctx.digits(), nu);
        const Complex d = eval_fourier_numeric(dens, rd, local);
        const Real lhs = denominator_product(rd, mu, nu, ctx.h());
        Real diff = abs(lhs - order * d.re);
        if (abs(order * d.im) > diff) diff = abs(order * d.im);
        if (diff > worst) worst = diff;
    }
    return worst;
}

Scalar tau_w(OKq& o, const DoubleSym& f, const WeylElement& w) {
    const RootDatum& rd = o.rd();
    const Weight w0 = rd.shifted_action(w, rd.zero());
    const int nb = o.dim(f.beta), ng = o.dim(f.gamma);
    Scalar total;
    for (int r = 0; r < ng; ++r) {
        if (!(o.weight(f.gamma, r) == w0)) continue;
        const CoeffElem u_lr(CoeffSym{f.gamma, f.l, r});
        const CoeffElem s_rk = o.symbol_antipode(CoeffSym{f.gamma, r, f.k}, -1);
        for (int m = 0; m < nb; ++m) {
            const Scalar val = o.haar_word({u_lr, o.symbol_antipode(CoeffSym{f.beta, m, f.j}, -1), s_rk,
                                            CoeffElem(CoeffSym{f.beta, f.i, m})});
            if (!val.is_zero()) total += val * rd.q_pow(w0, o.weight(f.beta, m));
        }
    }
    return total.is_zero() ? total : total * o.algebra().qdim(f.gamma);
}

Scalar tau_closed(OKq& o, const DoubleSym& f, const TauOptions& opt) {
    Scalar total;
    for (const auto& w : o.rd().weyl_group()) {
        const Scalar t = tau_w(o, f, w);
        total += opt.signs ? Scalar(w.sign()) * t : t;
    }
    return total;
}

Scalar tau_direct(OKq& o, const DoubleSym& f, const TauOptions& opt) {
    Scalar total;
    for (const auto& mu : distinct_weights(*o.algebra().irrep(f.beta))) {
        const FourierPoly ch = opt.d_power == -2 ? twisted_character_closed(o, f, mu)
                                                 : twisted_character_explicit(o, f, mu, opt.d_power);
        if (ch.is_zero()) continue;
        total += fourier_integrate(fourier_mul(ch, measure_density(o.rd(), mu, opt.signs)));
    }
    return total;
}

Scalar plancherel_expected(const DoubleSym& f) { return Scalar(f.gamma.is_zero() && f.i == f.j ? 1 : 0); }

Scalar TauTensor::entry(int l, int i, int k, int j) const {
    if (!exact) throw std::logic_error("tensor entries are only available on the exact path");
    const int idx = ((l * dim_beta + i) * dim_gamma + k) * dim_beta + j;
    auto it = std::lower_bound(block.begin(), block.end(), idx);
    if (it == block.end() || *it != idx) return Scalar();
    return value[it - block.begin()];
}

bool TauTensor::is_zero(const Real& tol) const {
    if (exact) {
        for (const auto& x : value)
            if (!x.is_zero()) return false;
        return true;
    }
    return max_abs <= tol;
}

TauTensor tau_tensor(Algebra& alg, const Weight& beta, const Weight& gamma, const TauTensorOptions& opt) {
    const RootDatum& rd = alg.rd();
    TauTensor t;
    t.beta = beta;
    t.gamma = gamma;
    const Module& vg = alg.irrep(gamma)->module;
    const Module& vb = alg.irrep(beta)->module;
    const Module dg = dual_module(vg, Twist::S);
    const Module db = dual_module(vb, Twist::S);
    t.dim_beta = vb.dim();
    t.dim_gamma = vg.dim();
    t.module = tensor({&vg, &vb, &dg, &db});
    const Weight zero = rd.zero();
    t.block = t.module.block(zero);
    const int zdim = static_cast<int>(t.block.size());
    std::map<int, int> pos;
    for (int p = 0; p < zdim; ++p) pos[t.block[p]] = p;

    // T = Σ_w (−1)^{l(w)} Σ_{ε_r = w.0} Σ_m q^{(ε_r, ε_m − 2ρ)} e_r ⊗ e_m ⊗ e^r ⊗ e^m
    std::vector<Scalar> tv(zdim);
    const Weight two_rho = 2 * rd.rho();
    for (const auto& w : rd.weyl_group()) {
        const Weight w0 = rd.shifted_action(w, zero);
        const int s = opt.signs ? w.sign() : 1;
        for (int r = 0; r < t.dim_gamma; ++r) {
            if (!(vg.weights[r] == w0)) continue;
            for (int m = 0; m < t.dim_beta; ++m) {
                const int idx = ((r * t.dim_beta + m) * t.dim_gamma + r) * t.dim_beta + m;
                tv[pos.at(idx)] += Scalar(s) * rd.q_pow(w0, vb.weights[m] - two_rho);
            }
        }
    }
    std::vector<DMat> up, in;
    for (int i = 0; i < rd.rank(); ++i) {
        up.push_back(e_block(t.module, i, zero));
        in.push_back(e_block(t.module, i, -rd.simple_root(i)));
    }
    if (zdim <= opt.exact_budget) {
        t.exact = true;
        t.value = project_block(up, in, tv, ExactPolicy{});
        return t;
    }
    t.exact = false;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> dist(0.5, 2.0);
    for (int k = 0; k < opt.samples; ++k) {
        double qd = dist(rng);
        while (std::abs(qd - 1.0) < 0.05) qd = dist(rng);
        const std::string qs = std::to_string(qd);
        t.q_values.push_back(qs);
        NumericContext ctx(qs, opt.digits);
        const NumericPolicy pol{pow(Real(10), -static_cast<int>(opt.digits / 2))};
        std::vector<Matrix<Real>> upn, inn;
        for (const auto& m : up) upn.push_back(evaluate(m, rd.L(), ctx));
        for (const auto& m : in) inn.push_back(evaluate(m, rd.L(), ctx));
        std::vector<Real> tn(zdim);
        for (int p = 0; p < zdim; ++p)
            if (!tv[p].is_zero()) tn[p] = eval_numeric(tv[p], rd.L(), ctx);
        for (const auto& x : project_block(upn, inn, tn, pol))
            if (abs(x) > t.max_abs) t.max_abs = abs(x);
    }
    return t;
}

Scalar tau_from_tensor(OKq& o, const TauTensor& t, const DoubleSym& f) {
    if (!(f.beta == t.beta) || !(f.gamma == t.gamma)) throw std::invalid_argument("symbol does not match the tensor");
    const Scalar v = t.entry(f.l, f.i, f.k, f.j);
    if (v.is_zero()) return v;
    return o.algebra().qdim(f.gamma) * o.k_pair(-2 * o.rd().rho(), f.gamma, f.l) * v;
}

InvLemmaResult sl2_invlemma_check(Algebra& alg, long beta2, long gamma2, long r2) {
    const RootDatum& rd = alg.rd();
    if (rd.rank() != 1 || rd.cartan()[0][0] != 2) throw std::invalid_argument("the recursion lemma is stated for A1");
    if (gamma2 <= 0 || beta2 < 0) throw std::invalid_argument("need γ > 0 and β ≥ 0");
    // r ∈ {−γ+1, …, γ}
    if (r2 < -gamma2 + 2 || r2 > gamma2 || (r2 - gamma2) % 2 != 0)
        throw std::out_of_range("r outside {−γ+1, …, γ}");
    const Weight beta{beta2}, gamma{gamma2};
    const Module& vg = alg.irrep(gamma)->module;
    const Module& vb = alg.irrep(beta)->module;
    const Module dg = dual_module(vg, Twist::S);
    const Module db = dual_module(vb, Twist::S);
    const Module m = tensor({&vg, &vb, &dg, &db});
    const SMat P = trivial_projection(m);
    const int nb = vb.dim(), ng = vg.dim();
    // basis vector of half-integer weight j (coordinate 2j) in V(γ)
    auto index_of = [&](long j2) {
        for (int r = 0; r < ng; ++r)
            if (vg.weights[r] == Weight{j2}) return r;
        throw std::logic_error("weight not found");
    };
    const int r_cur = index_of(r2), r_prev = index_of(r2 - 2);
    const int L = rd.L();
    std::map<int, Scalar> lhs, rhs;
    for (int b = 0; b < nb; ++b) {
        const Rational mm(vb.weights[b][0], 2), rr(r2, 2);
        const int i_prev = ((r_prev * nb + b) * ng + r_prev) * nb + b;
        const int i_cur = ((r_cur * nb + b) * ng + r_cur) * nb + b;
        lhs[i_prev] += q_power(-2 * mm * (rr + 1) + 2, L);
        rhs[i_cur] += q_power(-2 * mm * rr, L);
    }
    const auto pl = P.apply(lhs), pr = P.apply(rhs);
    std::map<int, Scalar> diff = pl;
    for (const auto& [k, x] : pr) diff[k] -= x;
    std::erase_if(diff, [](const auto& kv) { return kv.second.is_zero(); });
    InvLemmaResult res;
    res.pass = diff.empty();
    res.detail = !diff.empty() ? std::to_string(diff.size()) + " differing components"
                 : pl.empty()  ? "both sides vanish"
                               : "equal, nonzero";
    return res;
}

std::vector<DoubleSym> symbols_up_to(OKq& o, const std::vector<Weight>& betas, const std::vector<Weight>& gammas) {
    std::vector<DoubleSym> out;
    for (const auto& b : betas)
        for (const auto& g : gammas) {
            const int nb = o.dim(b), ng = o.dim(g);
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < nb; ++j)
                    for (int k = 0; k < ng; ++k)
                        for (int l = 0; l < ng; ++l) out.push_back({b, i, j, g, k, l});
        }
    return out;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t k = 0; k < n; ++k) f(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            try {
                for (std::size_t k = next++; k < n; k = next++) f(k);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<PlancherelReport> verify_plancherel(OKq& o, const std::vector<DoubleSym>& symbols, const SweepOptions& opt) {
    std::map<std::pair<Weight, Weight>, std::shared_ptr<TauTensor>> tensors;
    if (opt.with_tensor) {
        for (const auto& f : symbols) tensors[{f.beta, f.gamma}];
        TauTensorOptions topt;
        topt.signs = opt.tau.signs;
        std::vector<std::pair<Weight, Weight>> keys;
        for (const auto& [k, _] : tensors) keys.push_back(k);
        std::vector<std::shared_ptr<TauTensor>> built(keys.size());
        parallel_for(keys.size(), opt.jobs, [&](std::size_t n) {
            built[n] = std::make_shared<TauTensor>(tau_tensor(o.algebra(), keys[n].first, keys[n].second, topt));
        });
        for (std::size_t n = 0; n < keys.size(); ++n) tensors[keys[n]] = built[n];
    }
    std::vector<PlancherelReport> out(symbols.size());
    parallel_for(symbols.size(), opt.jobs, [&](std::size_t n) {
        const auto start = std::chrono::steady_clock::now();
        const DoubleSym& f = symbols[n];
        PlancherelReport r;
        r.algebra = o.rd().label();
        r.symbol = f;
        r.expected = plancherel_expected(f);
        r.closed = tau_closed(o, f, opt.tau);
        r.direct = tau_direct(o, f, opt.tau);
        r.pass = *r.closed == r.expected && *r.direct == r.expected;
        if (opt.with_tensor) {
            const auto& t = tensors.at({f.beta, f.gamma});
            if (t->exact) {
                r.tensor = tau_from_tensor(o, *t, f);
                r.pass = r.pass && *r.tensor == r.expected;
            }
        }
        if (opt.with_hopf) {
            Scalar h;
            const DoubleElem x = hopf_element(o, f);
            for (const auto& w : o.rd().weyl_group()) h += Scalar(w.sign()) * trace_general(o, x, w);
            r.hopf = h;
            r.pass = r.pass && h == r.expected;
        }
        r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out[n] = std::move(r);
    });
    return out;
}

std::vector<PlancherelReport> hopf_trace_identity_check(OKq& o, const std::vector<DoubleSym>& symbols, int jobs) {
    std::vector<PlancherelReport> out(symbols.size());
    parallel_for(symbols.size(), jobs, [&](std::size_t n) {
        const auto start = std::chrono::steady_clock::now();
        const DoubleSym& f = symbols[n];
        PlancherelReport r;
        r.algebra = o.rd().label();
        r.symbol = f;
        const DoubleElem x = hopf_element(o, f);
        r.expected = double_counit(o, x);
        Scalar h;
        for (const auto& w : o.rd().weyl_group()) h += Scalar(w.sign()) * trace_general(o, x, w);
        r.hopf = h;
        r.closed = tau_closed(o, f);
        r.pass = h == r.expected && *r.closed == r.expected;
        r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out[n] = std::move(r);
    });
    return out;
}

std::vector<ClassicalRow> classical_limit_check(const RootDatum& rd, const Weight& mu, const std::vector<Real>& nu,
                                                const std::vector<Real>& hs, unsigned digits) {
    const FourierPoly dens = measure_density(rd, mu);
    const long order = static_cast<long>(rd.weyl_group().size());
    std::vector<ClassicalRow> rows;
    for (const auto& h : hs) {
        Real hp = h;
        hp.precision(digits);
        NumericContext ctx(exp(hp), digits, nu);
        ClassicalRow row;
        row.h = ctx.h();
        Real classical = pow(ctx.h(), 2 * static_cast<int>(rd.positive_roots().size())) / order;
        for (const auto& a : rd.positive_roots()) {
            const Real x = to_real(rd.pairing(a, mu));
            const Real y = pair_real(rd, a, ctx.nu());
            classical *= x * x + y * y;
        }
        if (classical == 0) {
            row.degenerate = true;
            rows.push_back(row);
            continue;
        }
        row.ratio = eval_fourier_numeric(dens, rd, ctx).re / classical;
        row.deviation = abs(row.ratio - 1);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cqg
