#pragma once

#include "cqg/scalar.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <vector>

namespace cqg {

using Real = boost::multiprecision::mpfr_float;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct Complex {
    Real re, im;
    Complex() : re(0), im(0) {}
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }
    Real norm2() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm2()); }
    Complex conj() const { return {re, -im}; }
};

// e^{i θ}
Complex expi(const Real& theta);

// Evaluation point q > 0, q != 1 with a working precision in decimal digits.
// Construction sets the thread-local default MPFR precision; the previous
// precision is restored on destruction.
class NumericContext {
public:
    NumericContext(const Real& q, unsigned digits = 50, std::vector<Real> nu = {});
    NumericContext(const std::string& q, unsigned digits = 50, std::vector<Real> nu = {});
    NumericContext(const NumericContext&) = delete;
    NumericContext& operator=(const NumericContext&) = delete;
    ~NumericContext();

    const Real& q() const { return q_; }
    // h with q = e^h
    const Real& h() const { return h_; }
    unsigned digits() const { return digits_; }
    const std::vector<Real>& nu() const { return nu_; }
    void set_nu(std::vector<Real> nu) {
        for (auto& x : nu) x.precision(digits_);
        nu_ = std::move(nu);
    }
    // v = q^{1/L}
    Real v(int L) const;

private:
    unsigned digits_;
    unsigned saved_digits_;
    Real q_, h_;
    std::vector<Real> nu_;
};

Real eval_numeric(const Scalar& s, int L, const NumericContext& ctx);
Real eval_poly(const IntPoly& p, const Real& x);

}  // namespace cqg
