#pragma once

#include "cqg/numeric.hpp"
#include "cqg/rootdata.hpp"
#include "cqg/scalar.hpp"
#include "cqg/weight.hpp"

#include <map>
#include <string>

namespace cqg {

// Finite sum Σ c_λ q^{(iν, λ)} over weights λ; zero coefficients are never stored.
class FourierPoly {
public:
    FourierPoly() = default;
    static FourierPoly constant(const Scalar& c, std::size_t rank);
    static FourierPoly monomial(const Weight& w, const Scalar& c);

    const std::map<Weight, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Weight& w) const;
    void add(const Weight& w, const Scalar& c);

    FourierPoly& operator+=(const FourierPoly& o);
    friend FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
    friend FourierPoly operator-(const FourierPoly& a, const FourierPoly& b);
    FourierPoly scaled(const Scalar& c) const;
    // λ ↦ −λ on indices
    FourierPoly conjugate() const;
    // apply an index map, e.g. a Weyl group element
    template <class F>
    FourierPoly relabeled(F&& f) const {
        FourierPoly r;
        for (const auto& [w, c] : terms_) r.add(f(w), c);
        return r;
    }

    friend bool operator==(const FourierPoly& a, const FourierPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FourierPoly& a, const FourierPoly& b) { return !(a == b); }

private:
    std::map<Weight, Scalar> terms_;
};

FourierPoly fourier_mul(const FourierPoly& a, const FourierPoly& b);
// coefficient of the zero weight
Scalar fourier_integrate(const FourierPoly& p);
// replace q^{(iν, λ)} by q^{(x, λ)} for an exact weight x
Scalar fourier_specialize(const FourierPoly& p, const RootDatum& rd, const Weight& x);
// value at the torus point ctx.nu() given in fundamental-weight coordinates:
// q^{(iν, λ)} = e^{i h (ν, λ)}
Complex eval_fourier_numeric(const FourierPoly& p, const RootDatum& rd, const NumericContext& ctx);

}  // namespace cqg
