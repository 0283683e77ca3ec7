#pragma once

// Dense matrices over a ring with involution.  Entries must support
// +, -, *, unary -, ==, is_zero(), and a free conj().

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace blanchfield {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static Matrix identity(int n, const T& one) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = r.data_[k] + o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = r.data_[k] - o.data_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::runtime_error("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j).is_zero()) continue;
                    r(i, j) = r(i, j) + a * o(k, j);
                }
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = c * x;
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && (*this - o).is_zero();
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Matrix conj_transpose(const Matrix& m) {
        Matrix r(m.cols_, m.rows_);
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) r(j, i) = conj(m(i, j));
        return r;
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix submatrix(int r0, int c0, int nr, int nc) const {
        Matrix m(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    void paste(int r0, int c0, const Matrix& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix apply(T (*f)(const T&)) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = f(x);
        return r;
    }

  private:
    int rows_, cols_;
    std::vector<T> data_;
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::runtime_error("matrix shape mismatch");
    }
};

template <class T>
Matrix<T> mat_vec_to_matrix(const std::vector<T>& v) {
    Matrix<T> m((int)v.size(), 1);
    for (int i = 0; i < (int)v.size(); ++i) m(i, 0) = v[i];
    return m;
}

// m * v for a column vector v
template <class T>
std::vector<T> mat_apply(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != (int)v.size()) throw std::runtime_error("mat_apply shape mismatch");
    std::vector<T> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        T acc{};
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) acc = acc + m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace blanchfield
