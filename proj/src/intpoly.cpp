#include "cqg/intpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cqg {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::low_order() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
    return k;
}

IntPoly IntPoly::shifted_down(int k) const {
    if (k == 0) return *this;
    IntPoly p;
    p.c_.assign(c_.begin() + k, c_.end());
    return p;
}

IntPoly IntPoly::shifted_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    IntPoly p;
    p.c_.resize(c_.size() + k);
    std::copy(c_.begin(), c_.end(), p.c_.begin() + k);
    return p;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void IntPoly::divide_content(const mpz_class& c) {
    if (c == 1) return;
    for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

void IntPoly::negate() {
    for (auto& x : c_) x = -x;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a : b;
    const auto& small = a.c_.size() >= b.c_.size() ? b : a;
    IntPoly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const mpz_class& s) {
    IntPoly r;
    if (s == 0) return r;
    r.c_ = a.c_;
    for (auto& x : r.c_) x *= s;
    return r;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_remainder: division by zero polynomial");
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    int dr = static_cast<int>(r.size()) - 1;
    int steps = dr - db + 1;
    while (dr >= db) {
        mpz_class lr = r[dr];
        for (int i = 0; i <= dr; ++i) r[i] *= lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b[i];
        --steps;
        while (dr >= 0 && r[dr] == 0) --dr;
        r.resize(dr + 1);
    }
    if (steps > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), steps);
        for (auto& x : r) x *= f;
    }
    return IntPoly(std::move(r));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (a.is_zero()) return a;
    if (b.degree() == 0) {
        std::vector<mpz_class> q = a.coeffs();
        for (auto& x : q) {
            if (!mpz_divisible_p(x.get_mpz_t(), b[0].get_mpz_t()))
                throw std::logic_error("divide_exact: not divisible");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b[0].get_mpz_t());
        }
        return IntPoly(std::move(q));
    }
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) throw std::logic_error("divide_exact: not divisible");
    std::vector<mpz_class> q(da - db + 1);
    for (int k = da - db; k >= 0; --k) {
        mpz_class& top = r[k + db];
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
            throw std::logic_error("divide_exact: not divisible");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        for (int i = 0; i <= db; ++i) mpz_submul(r[k + i].get_mpz_t(), q[k].get_mpz_t(), b[i].get_mpz_t());
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0) throw std::logic_error("divide_exact: not divisible");
    return IntPoly(std::move(q));
}

namespace {
IntPoly primitive_part(IntPoly p) {
    mpz_class c = p.content();
    if (c != 0) p.divide_content(c);
    if (!p.is_zero() && p.lead() < 0) p.negate();
    return p;
}
}  // namespace

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(1);
    IntPoly x = primitive_part(a.degree() >= b.degree() ? a : b);
    IntPoly y = primitive_part(a.degree() >= b.degree() ? b : a);
    if (x == y) return x;
    while (y.degree() > 0) {
        IntPoly r = pseudo_remainder(x, y);
        if (r.is_zero()) return y;
        x = std::move(y);
        y = primitive_part(std::move(r));
    }
    return IntPoly::constant(1);
}

}  // namespace cqg
