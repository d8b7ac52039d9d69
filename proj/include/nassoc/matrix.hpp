#pragma once

#include <string>
#include <vector>

#include "scalar.hpp"

namespace nassoc {

namespace detail {
inline std::size_t pivot_weight(const Scalar& s) { return s.weight(); }
inline std::size_t pivot_weight(const GQ&) { return 0; }
inline std::size_t pivot_weight(const mpq_class&) { return 0; }
inline bool is_zero_elem(const Scalar& s) { return s.is_zero(); }
inline bool is_zero_elem(const GQ& s) { return s.is_zero(); }
inline bool is_zero_elem(const mpq_class& s) { return sgn(s) == 0; }
}  // namespace detail

// Dense row-major matrix over a field F.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_(std::size_t(r) * c, F(0)) {}
    Matrix(std::initializer_list<std::initializer_list<F>> rows)
    {
        r_ = int(rows.size());
        c_ = r_ ? int(rows.begin()->size()) : 0;
        for (auto& row : rows) {
            if (int(row.size()) != c_) throw DimensionMismatch("ragged matrix literal");
            for (auto& x : row) a_.push_back(x);
        }
    }
    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<F>>& rows)
    {
        Matrix m;
        m.r_ = int(rows.size());
        m.c_ = m.r_ ? int(rows[0].size()) : 0;
        for (auto& row : rows) {
            if (int(row.size()) != m.c_) throw DimensionMismatch("ragged matrix");
            for (auto& x : row) m.a_.push_back(x);
        }
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    F& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const F& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }
    std::vector<F> row(int i) const { return std::vector<F>(a_.begin() + std::size_t(i) * c_, a_.begin() + std::size_t(i + 1) * c_); }
    std::vector<F> col(int j) const
    {
        std::vector<F> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    bool is_square() const { return r_ == c_; }

    Matrix transpose() const
    {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const F& x = a(i, k);
                if (detail::is_zero_elem(x)) continue;
                for (int j = 0; j < b.c_; ++j)
                    if (!detail::is_zero_elem(b(k, j))) m(i, j) = m(i, j) + x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum shape");
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + b.a_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix difference shape");
        Matrix m = a;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] - b.a_[k];
        return m;
    }
    Matrix scaled(const F& s) const
    {
        Matrix m = *this;
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    // Row vector times matrix.
    std::vector<F> left_apply(const std::vector<F>& v) const
    {
        if (int(v.size()) != r_) throw DimensionMismatch("vector-matrix shape");
        std::vector<F> out(c_, F(0));
        for (int i = 0; i < r_; ++i) {
            if (detail::is_zero_elem(v[i])) continue;
            for (int j = 0; j < c_; ++j)
                if (!detail::is_zero_elem((*this)(i, j))) out[j] = out[j] + v[i] * (*this)(i, j);
        }
        return out;
    }
    // Matrix times column vector.
    std::vector<F> apply(const std::vector<F>& v) const
    {
        if (int(v.size()) != c_) throw DimensionMismatch("matrix-vector shape");
        std::vector<F> out(r_, F(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!detail::is_zero_elem(v[j]) && !detail::is_zero_elem((*this)(i, j)))
                    out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Reduced row echelon form in place; returns pivot columns. If `aug` is
    // given, the same row operations are applied to it.
    std::vector<int> rref(Matrix* aug = nullptr)
    {
        std::vector<int> piv;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int best = -1;
            std::size_t bw = 0;
            for (int i = row; i < r_; ++i) {
                if (detail::is_zero_elem((*this)(i, col))) continue;
                std::size_t w = detail::pivot_weight((*this)(i, col));
                if (best < 0 || w < bw) {
                    best = i;
                    bw = w;
                    if (w == 0) break;
                }
            }
            if (best < 0) continue;
            swap_rows(row, best);
            if (aug) aug->swap_rows(row, best);
            F inv = F(1) / (*this)(row, col);
            for (int j = 0; j < c_; ++j)
                if (!detail::is_zero_elem((*this)(row, j))) (*this)(row, j) = (*this)(row, j) * inv;
            if (aug)
                for (int j = 0; j < aug->c_; ++j)
                    if (!detail::is_zero_elem((*aug)(row, j))) (*aug)(row, j) = (*aug)(row, j) * inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row) continue;
                F f = (*this)(i, col);
                if (detail::is_zero_elem(f)) continue;
                for (int j = col; j < c_; ++j)
                    if (!detail::is_zero_elem((*this)(row, j))) (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
                if (aug)
                    for (int j = 0; j < aug->c_; ++j)
                        if (!detail::is_zero_elem((*aug)(row, j))) (*aug)(i, j) = (*aug)(i, j) - f * (*aug)(row, j);
            }
            piv.push_back(col);
            ++row;
        }
        return piv;
    }

    int rank() const
    {
        Matrix m = *this;
        return int(m.rref().size());
    }

    // Kernel basis of the map x -> M x (x a column vector).
    std::vector<std::vector<F>> nullspace() const
    {
        Matrix m = *this;
        auto piv = m.rref();
        std::vector<bool> is_piv(c_, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<std::vector<F>> basis;
        for (int f = 0; f < c_; ++f) {
            if (is_piv[f]) continue;
            std::vector<F> v(c_, F(0));
            v[f] = F(1);
            for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F(0) - m(int(r), f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Matrix inverse() const
    {
        if (!is_square()) throw DimensionMismatch("inverse of non-square matrix");
        Matrix m = *this;
        Matrix inv = identity(r_);
        auto piv = m.rref(&inv);
        if (int(piv.size()) != r_) throw SingularError();
        return inv;
    }

    F det() const
    {
        if (!is_square()) throw DimensionMismatch("determinant of non-square matrix");
        Matrix m = *this;
        F d(1);
        for (int col = 0; col < r_; ++col) {
            int best = -1;
            std::size_t bw = 0;
            for (int i = col; i < r_; ++i) {
                if (detail::is_zero_elem(m(i, col))) continue;
                std::size_t w = detail::pivot_weight(m(i, col));
                if (best < 0 || w < bw) {
                    best = i;
                    bw = w;
                }
            }
            if (best < 0) return F(0);
            if (best != col) {
                m.swap_rows(col, best);
                d = F(0) - d;
            }
            d = d * m(col, col);
            F inv = F(1) / m(col, col);
            for (int i = col + 1; i < r_; ++i) {
                F f = m(i, col) * inv;
                if (detail::is_zero_elem(f)) continue;
                for (int j = col; j < r_; ++j)
                    if (!detail::is_zero_elem(m(col, j))) m(i, j) = m(i, j) - f * m(col, j);
            }
        }
        return d;
    }

    void swap_rows(int i, int j)
    {
        if (i == j) return;
        for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    template <class G>
    Matrix map(G g) const
    {
        Matrix m = *this;
        for (auto& x : m.a_) x = g(x);
        return m;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<F> a_;
};

using SMatrix = Matrix<Scalar>;

inline std::string matrix_str(const SMatrix& m)
{
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        s += i ? "; [" : "[";
        for (int j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
        s += "]";
    }
    return s + "]";
}

}  // namespace nassoc
