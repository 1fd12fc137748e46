#pragma once

#include "cqg/intpoly.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cqg {

using Rational = mpq_class;

struct ExponentError : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of the rational function field Q(v). The deformation parameter is
// q = v^L, with L fixed by the root datum.
//
// Canonical form: value = v^shift * num(v) / den(v) with num, den in Z[v],
// both having nonzero constant term, gcd(num, den) = 1 in Q[v], the joint
// content of num and den equal to 1 and lead(den) > 0. Zero is num = 0,
// den = 1, shift = 0. Equality is structural.
class Scalar {
public:
    Scalar();
    Scalar(long n);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const Rational& r);

    // v^k
    static Scalar v_power(long k);
    // Arbitrary v^shift * num / den; normalizes.
    static Scalar fraction(long shift, IntPoly num, IntPoly den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // True when the denominator is a constant (a Laurent polynomial with
    // rational coefficients).
    bool is_laurent() const { return den_.degree() == 0; }

    long shift() const { return shift_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long n) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical serialization "num/den", each side a sum of "c*v^k" terms in
    // descending order of k.
    std::string str() const;
    static Scalar parse(std::string_view text);
    // Human-readable form in q = v^L when every exponent is divisible by L,
    // e.g. "q + q^-1"; falls back to the canonical form otherwise.
    std::string pretty(int L) const;

    std::size_t hash() const;

private:
    static Scalar normalized(long shift, IntPoly num, IntPoly den);

    long shift_ = 0;
    IntPoly num_;
    IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// q^e = v^(L e); throws ExponentError if L e is not an integer.
Scalar q_power(const Rational& e, int L);

// The q-number [z]_q = (q^z - q^-z) / (q - q^-1).
Scalar qnum(const Rational& z, int L);

// [n]_{q^d}, the q-number to base q_i = q^d.
Scalar qnum_base(long n, long d, int L);

// Gaussian binomial [n choose k]_{q^d}.
Scalar qbinomial_base(long n, long k, long d, int L);

}  // namespace cqg

template <>
struct std::hash<cqg::Scalar> {
    std::size_t operator()(const cqg::Scalar& s) const noexcept { return s.hash(); }
};
