#pragma once

#include "cqg/scalar.hpp"
#include "cqg/weight.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqg {

struct RootDatumError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using IntMatrix = std::vector<std::vector<long>>;

struct WeylElement {
    std::vector<int> word;  // reduced word, leftmost letter applied last
    IntMatrix action;       // acts on fundamental-weight coordinates
    int length = 0;
    int sign() const { return (length % 2) ? -1 : 1; }
};

class RootDatum {
public:
    // "A2", "B3", "G2", ...
    static RootDatum from_series(const std::string& spec);
    static RootDatum from_cartan(const IntMatrix& cartan, std::string label = "custom");

    const std::string& label() const { return label_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    const IntMatrix& cartan() const { return cartan_; }
    long a(int i, int j) const { return cartan_[i][j]; }
    long d(int i) const { return d_[i]; }
    const std::vector<long>& symmetrizers() const { return d_; }
    // (ϖ_i, ϖ_j)
    const std::vector<std::vector<Rational>>& form() const { return form_; }
    int L() const { return L_; }

    Weight zero() const { return Weight(static_cast<std::size_t>(rank())); }
    Weight fundamental(int i) const;
    // α_i in fundamental coordinates (column i of the Cartan matrix)
    Weight simple_root(int i) const;
    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    // positive roots in simple-root coordinates, aligned with positive_roots()
    const std::vector<std::vector<long>>& positive_roots_simple() const { return pos_roots_simple_; }
    Weight rho() const;

    Rational pairing(const Weight& x, const Weight& y) const;
    // q^{(x,y)}
    Scalar q_pow(const Weight& x, const Weight& y) const;
    // v-exponent L (x,y)
    long v_exponent(const Weight& x, const Weight& y) const;

    // Weyl group, identity first, ordered by length (BFS order).
    const std::vector<WeylElement>& weyl_group() const;
    Weight act(const WeylElement& w, const Weight& x) const;
    // w(x + ρ) − ρ
    Weight shifted_action(const WeylElement& w, const Weight& x) const;
    const WeylElement& longest_element() const;
    // −w₀ λ
    Weight dual_weight(const Weight& x) const;
    // index of the product w1 w2 in weyl_group()
    std::size_t compose(std::size_t w1, std::size_t w2) const;
    std::size_t index_of(const IntMatrix& action) const;

    static constexpr std::size_t kWeylGroupCap = 100000;

private:
    RootDatum() = default;
    void finish();

    std::string label_;
    IntMatrix cartan_;
    std::vector<long> d_;
    std::vector<std::vector<Rational>> form_;
    int L_ = 1;
    std::vector<Weight> pos_roots_;
    std::vector<std::vector<long>> pos_roots_simple_;
    std::vector<WeylElement> weyl_;
    bool weyl_too_large_ = false;
    std::size_t longest_ = 0;
    std::map<IntMatrix, std::size_t> weyl_index_;
};

IntMatrix cartan_matrix(char series, int rank);

}  // namespace cqg
