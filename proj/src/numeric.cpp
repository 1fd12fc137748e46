#include "cqg/numeric.hpp"

namespace cqg {

Complex expi(const Real& theta) { return {cos(theta), sin(theta)}; }

NumericContext::NumericContext(const Real& q, unsigned digits, std::vector<Real> nu)
    : digits_(digits), saved_digits_(Real::default_precision()) {
    if (digits < 30) throw std::invalid_argument("numeric precision must be at least 30 digits");
    Real::default_precision(digits);
    q_ = Real(q);
    q_.precision(digits);
    if (!(q_ > 0) || q_ == 1) throw std::invalid_argument("q must be positive and different from 1");
    h_ = log(q_);
    set_nu(std::move(nu));
}

NumericContext::NumericContext(const std::string& q, unsigned digits, std::vector<Real> nu)
    : digits_(digits), saved_digits_(Real::default_precision()) {
    if (digits < 30) throw std::invalid_argument("numeric precision must be at least 30 digits");
    Real::default_precision(digits);
    q_ = Real(q);
    if (!(q_ > 0) || q_ == 1) throw std::invalid_argument("q must be positive and different from 1");
    h_ = log(q_);
    set_nu(std::move(nu));
}

NumericContext::~NumericContext() { Real::default_precision(saved_digits_); }

Real NumericContext::v(int L) const { return exp(h_ / L); }

Real eval_poly(const IntPoly& p, const Real& x) {
    Real acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + Real(p[i].get_mpz_t());
    return acc;
}

Real eval_numeric(const Scalar& s, int L, const NumericContext& ctx) {
    if (s.is_zero()) return Real(0);
    const Real v = ctx.v(L);
    Real den = eval_poly(s.den(), v);
    // floor relative to the size of the denominator coefficients
    Real scale = 0;
    Real vp = 1;
    const Real av = abs(v);
    for (int i = 0; i <= s.den().degree(); ++i) {
        scale += abs(Real(s.den()[i].get_mpz_t())) * vp;
        vp *= av;
    }
    Real floor = scale * pow(Real(10), -static_cast<int>(ctx.digits()) + 5);
    if (abs(den) <= floor) throw PoleError("denominator vanishes at the evaluation point");
    return pow(v, s.shift()) * eval_poly(s.num(), v) / den;
}

}  // namespace cqg
