#pragma once

#include "cqg/numeric.hpp"
#include "cqg/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cqg {

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

// Pivoting policies. Exact: any nonzero entry, preferring small
// representations. Numeric: largest magnitude, entries below tol are zero.
struct ExactPolicy {
    bool negligible(const Scalar& x) const { return x.is_zero(); }
    long score(const Scalar& x) const {
        return -static_cast<long>(x.num().size() + x.den().size());
    }
};

struct NumericPolicy {
    Real tol;
    bool negligible(const Real& x) const { return abs(x) <= tol; }
    Real score(const Real& x) const { return abs(x); }
};

template <class T>
bool is_zero_value(const T& x) {
    if constexpr (std::is_same_v<T, Scalar>)
        return x.is_zero();
    else
        return x == 0;
}

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& a = x(i, k);
                if (is_zero_value(a)) continue;
                for (int j = 0; j < y.cols_; ++j)
                    if (!is_zero_value(y(k, j))) z(i, j) += a * y(k, j);
            }
        return z;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix z = x;
        for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix z = x;
        for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!is_zero_value(x)) return false;
        return true;
    }

    std::vector<T> column(int j) const {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void swap_rows(int r, int s) {
        if (r == s) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(r, j), (*this)(s, j));
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// In-place reduced row echelon form; returns pivot columns.
template <class T, class P>
std::vector<int> rref(Matrix<T>& m, const P& policy) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int best = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (policy.negligible(m(r, col))) continue;
            if (best < 0 || policy.score(m(r, col)) > policy.score(m(best, col))) best = r;
        }
        if (best < 0) {
            for (int r = row; r < m.rows(); ++r) m(r, col) = T(0);
            continue;
        }
        m.swap_rows(row, best);
        const T inv = T(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j)
            if (!is_zero_value(m(row, j))) m(row, j) = m(row, j) * inv;
        m(row, col) = T(1);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero_value(m(r, col))) continue;
            const T f = m(r, col);
            for (int j = col; j < m.cols(); ++j)
                if (!is_zero_value(m(row, j))) m(r, j) -= f * m(row, j);
            m(r, col) = T(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::vector<int> rref(Matrix<Scalar>& m) { return rref(m, ExactPolicy{}); }

// Columns span the null space; free variable k gets coefficient 1.
template <class T, class P>
Matrix<T> kernel(Matrix<T> m, const P& policy) {
    auto pivots = rref(m, policy);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix<T> k(m.cols(), static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], static_cast<int>(f)) = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k(pivots[r], static_cast<int>(f)) = -m(static_cast<int>(r), free[f]);
    }
    return k;
}

inline Matrix<Scalar> kernel(const Matrix<Scalar>& m) { return kernel(m, ExactPolicy{}); }

template <class T, class P>
Matrix<T> inverse(const Matrix<T>& m, const P& policy) {
    if (m.rows() != m.cols()) throw SingularMatrixError("inverse of a non-square matrix");
    const int n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto pivots = rref(aug, policy);
    if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
        throw SingularMatrixError("matrix is singular");
    Matrix<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Matrix<Scalar> inverse(const Matrix<Scalar>& m) { return inverse(m, ExactPolicy{}); }

template <class T, class P>
int rank(Matrix<T> m, const P& policy) {
    return static_cast<int>(rref(m, policy).size());
}

// Sparse matrix stored by columns; entries in each column sorted by row.
template <class T>
class SparseMatrix {
public:
    using Column = std::vector<std::pair<int, T>>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.col_[i].emplace_back(i, T(1));
        return m;
    }
    static SparseMatrix diagonal(const std::vector<T>& d) {
        const int n = static_cast<int>(d.size());
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            if (!is_zero_value(d[i])) m.col_[i].emplace_back(i, d[i]);
        return m;
    }
    static SparseMatrix from_dense(const Matrix<T>& d) {
        SparseMatrix m(d.rows(), d.cols());
        for (int j = 0; j < d.cols(); ++j)
            for (int i = 0; i < d.rows(); ++i)
                if (!is_zero_value(d(i, j))) m.col_[j].emplace_back(i, d(i, j));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Column& column(int j) const { return col_[j]; }
    Column& column_mut(int j) { return col_[j]; }

    T get(int i, int j) const {
        const auto& c = col_[j];
        auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int r) { return e.first < r; });
        if (it != c.end() && it->first == i) return it->second;
        return T(0);
    }
    void add(int i, int j, const T& x) {
        if (is_zero_value(x)) return;
        auto& c = col_[j];
        auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, int r) { return e.first < r; });
        if (it != c.end() && it->first == i) {
            it->second += x;
            if (is_zero_value(it->second)) c.erase(it);
        } else {
            c.insert(it, {i, x});
        }
    }
    // column j given as a dense vector
    void set_column(int j, const std::vector<T>& v) {
        col_[j].clear();
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (!is_zero_value(v[i])) col_[j].emplace_back(i, v[i]);
    }
    void set_column(int j, const std::map<int, T>& v) {
        col_[j].clear();
        for (const auto& [i, x] : v)
            if (!is_zero_value(x)) col_[j].emplace_back(i, x);
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : col_) n += c.size();
        return n;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        std::vector<T> y(rows_, T(0));
        for (int j = 0; j < cols_; ++j) {
            if (is_zero_value(x[j])) continue;
            for (const auto& [i, a] : col_[j]) y[i] += a * x[j];
        }
        return y;
    }
    std::map<int, T> apply(const std::map<int, T>& x) const {
        std::map<int, T> y;
        for (const auto& [j, xj] : x)
            for (const auto& [i, a] : col_[j]) {
                auto [it, ins] = y.emplace(i, a * xj);
                if (!ins) it->second += a * xj;
            }
        for (auto it = y.begin(); it != y.end();)
            it = is_zero_value(it->second) ? y.erase(it) : std::next(it);
        return y;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, a] : col_[j]) t.col_[i].emplace_back(j, a);
        return t;
    }

    friend SparseMatrix operator*(const SparseMatrix& x, const SparseMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("SparseMatrix: dimension mismatch");
        SparseMatrix z(x.rows_, y.cols_);
        for (int j = 0; j < y.cols_; ++j) {
            std::map<int, T> acc;
            for (const auto& [k, b] : y.col_[j])
                for (const auto& [i, a] : x.col_[k]) {
                    auto [it, ins] = acc.emplace(i, a * b);
                    if (!ins) it->second += a * b;
                }
            z.set_column(j, acc);
        }
        return z;
    }
    friend SparseMatrix operator+(const SparseMatrix& x, const SparseMatrix& y) {
        SparseMatrix z = x;
        for (int j = 0; j < y.cols_; ++j)
            for (const auto& [i, a] : y.col_[j]) z.add(i, j, a);
        return z;
    }
    friend SparseMatrix operator-(const SparseMatrix& x, const SparseMatrix& y) {
        SparseMatrix z = x;
        for (int j = 0; j < y.cols_; ++j)
            for (const auto& [i, a] : y.col_[j]) z.add(i, j, -a);
        return z;
    }
    SparseMatrix scaled(const T& s) const {
        SparseMatrix z(rows_, cols_);
        if (is_zero_value(s)) return z;
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, a] : col_[j]) z.col_[j].emplace_back(i, a * s);
        return z;
    }
    // diag(l) * M * diag(r)
    SparseMatrix scaled_by(const std::vector<T>* l, const std::vector<T>* r) const {
        SparseMatrix z(rows_, cols_);
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, a] : col_[j]) {
                T x = a;
                if (l) x = (*l)[i] * x;
                if (r) x = x * (*r)[j];
                if (!is_zero_value(x)) z.col_[j].emplace_back(i, x);
            }
        return z;
    }

    friend bool operator==(const SparseMatrix& x, const SparseMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.col_ == y.col_;
    }
    bool is_zero() const {
        for (const auto& c : col_)
            if (!c.empty()) return false;
        return true;
    }

    Matrix<T> to_dense() const {
        Matrix<T> d(rows_, cols_);
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, a] : col_[j]) d(i, j) = a;
        return d;
    }

    template <class U, class F>
    SparseMatrix<U> map(F&& f) const {
        SparseMatrix<U> z(rows_, cols_);
        for (int j = 0; j < cols_; ++j)
            for (const auto& [i, a] : col_[j]) z.column_mut(j).emplace_back(i, f(a));
        return z;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Column> col_;
};

// A ⊗ B with index (x, y) ↦ x * B.rows() + y.
template <class T>
SparseMatrix<T> kron(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    SparseMatrix<T> z(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (int jb = 0; jb < b.cols(); ++jb) {
            auto& col = z.column_mut(ja * b.cols() + jb);
            for (const auto& [ia, x] : a.column(ja))
                for (const auto& [ib, y] : b.column(jb)) col.emplace_back(ia * b.rows() + ib, x * y);
        }
    return z;
}

}  // namespace cqg
