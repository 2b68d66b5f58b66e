#pragma once

#include <gmpxx.h>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/gaussian.hpp"

namespace plumb {

// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& init = T{})
        : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, init) {
        if (rows < 0 || cols < 0) throw error("matrix dimensions must be non-negative");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw error("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix sum dimension mismatch");
        Matrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.v_.size(); ++i) c.v_[i] = a.v_[i] + b.v_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix difference dimension mismatch");
        Matrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.v_.size(); ++i) c.v_[i] = a.v_[i] - b.v_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> v_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;
using GaussMatrix = Matrix<GaussianRational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = mpq_class(m(i, j));
    return r;
}

// Text form: first line is the dimension, then one line per row.
IntMatrix parse_int_matrix(const std::string& text);
std::string format_int_matrix(const IntMatrix& m);

}  // namespace plumb
