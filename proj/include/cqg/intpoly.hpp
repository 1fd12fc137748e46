#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cqg {

// Dense univariate polynomial over Z, coefficients stored low degree first.
// The zero polynomial has no coefficients; otherwise the top coefficient is
// nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(const mpz_class& c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    const mpz_class& lead() const { return c_.back(); }
    std::size_t size() const { return c_.size(); }

    // number of trailing (low degree) zero coefficients
    int low_order() const;
    IntPoly shifted_down(int k) const;
    IntPoly shifted_up(int k) const;

    mpz_class content() const;
    void divide_content(const mpz_class& c);
    void negate();

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const mpz_class& s);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Division that is known to be exact over Z; throws std::logic_error otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient (content discarded).
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace cqg
