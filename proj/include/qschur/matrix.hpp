#ifndef QSCHUR_MATRIX_HPP
#define QSCHUR_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

// Dense matrix over an exact field F. F needs: construction from int,
// +, -, *, /, unary -, ==. Used with RationalFunction (generic v) and
// mpq_class (specializations); everything is exact, there is no pivoting
// strategy beyond "first nonzero".
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, F(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const F& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const F& x : e_)
            if (!(x == F(0))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix operator-() const {
        Matrix r = *this;
        for (F& x : r.e_) x = -x;
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] = e_[k] + o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] = e_[k] - o.e_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw internal_error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F& aik = a.at(i, k);
                if (aik == F(0)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const F& bkj = b.at(k, j);
                    if (!(bkj == F(0))) r.at(i, j) = r.at(i, j) + aik * bkj;
                }
            }
        return r;
    }

    friend Matrix operator*(const F& s, const Matrix& m) {
        Matrix r = m;
        for (F& x : r.e_) x = s * x;
        return r;
    }

    // Column vector action.
    std::vector<F> apply(const std::vector<F>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw internal_error("matrix apply shape mismatch");
        std::vector<F> y(rows_, F(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(at(i, j) == F(0)) && !(x[j] == F(0))) y[i] = y[i] + at(i, j) * x[j];
        return y;
    }

    // Row-major flattening, for span-closure echelons.
    const std::vector<F>& flat() const { return e_; }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<F> e_;
};

// Incremental reduced row-echelon basis of vectors of a fixed length.
// insert() returns whether the rank grew; rows are kept fully reduced so
// membership tests are a single reduction pass.
template <class F>
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    // Reduce v against the basis in place; afterwards v is the canonical
    // representative of its coset.
    void reduce(std::vector<F>& v) const {
        for (const auto& [piv, row] : rows_) {
            const F& c = v[piv];
            if (c == F(0)) continue;
            F f = c; // row is normalized with row[piv] == 1
            for (std::size_t j = piv; j < width_; ++j)
                if (!(row[j] == F(0))) v[j] = v[j] - f * row[j];
        }
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const F& x : v)
            if (!(x == F(0))) return false;
        return true;
    }

    bool insert(std::vector<F> v) {
        if (v.size() != width_) throw internal_error("echelon width mismatch");
        reduce(v);
        std::size_t piv = 0;
        while (piv < width_ && v[piv] == F(0)) ++piv;
        if (piv == width_) return false;
        F lead = v[piv];
        for (std::size_t j = piv; j < width_; ++j)
            if (!(v[j] == F(0))) v[j] = v[j] / lead;
        // Back-substitute into existing rows to keep the basis reduced.
        for (auto& [p, row] : rows_) {
            const F& c = row[piv];
            if (c == F(0)) continue;
            F f = c;
            for (std::size_t j = piv; j < width_; ++j)
                if (!(v[j] == F(0))) row[j] = row[j] - f * v[j];
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->first < piv) ++pos;
        rows_.insert(pos, {piv, std::move(v)});
        return true;
    }

    // Coordinates of v in terms of the inserted generators are not tracked;
    // this class only answers rank/membership questions.

private:
    std::size_t width_;
    std::vector<std::pair<std::size_t, std::vector<F>>> rows_;
};

template <class F>
int rank(const Matrix<F>& m) {
    Echelon<F> ech(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<F> row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        ech.insert(std::move(row));
    }
    return static_cast<int>(ech.dim());
}

// Solve A x = b exactly; nullopt when inconsistent. When the system is
// underdetermined the free variables are set to 0 (deterministic).
template <class F>
std::optional<std::vector<F>> solve(Matrix<F> a, std::vector<F> b) {
    const int m = a.rows(), n = a.cols();
    if (static_cast<int>(b.size()) != m) throw internal_error("solve shape mismatch");
    std::vector<int> pivot_col_of_row(m, -1);
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int p = r;
        while (p < m && a.at(p, col) == F(0)) ++p;
        if (p == m) continue;
        if (p != r) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(r, j));
            std::swap(b[p], b[r]);
        }
        F inv = F(1) / a.at(r, col);
        for (int j = col; j < n; ++j) a.at(r, j) = inv * a.at(r, j);
        b[r] = inv * b[r];
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            F f = a.at(i, col);
            if (f == F(0)) continue;
            for (int j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
            b[i] = b[i] - f * b[r];
        }
        pivot_col_of_row[r] = col;
        ++r;
    }
    for (int i = r; i < m; ++i)
        if (!(b[i] == F(0))) return std::nullopt;
    std::vector<F> x(n, F(0));
    for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw internal_error("inverse of non-square matrix");
    const int n = m.rows();
    Matrix<F> a = m, inv = Matrix<F>::identity(n);
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && a.at(p, col) == F(0)) ++p;
        if (p == n) throw internal_error("inverse of singular matrix");
        if (p != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(col, j));
                std::swap(inv.at(p, j), inv.at(col, j));
            }
        F f = F(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = f * a.at(col, j);
            inv.at(col, j) = f * inv.at(col, j);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            F g = a.at(i, col);
            if (g == F(0)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - g * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - g * inv.at(col, j);
            }
        }
    }
    return inv;
}

} // namespace qschur

#endif
