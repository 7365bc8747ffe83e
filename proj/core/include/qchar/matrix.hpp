#ifndef QCHAR_MATRIX_HPP
#define QCHAR_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qchar/rational.hpp"

namespace qchar {

/// Dense row-major matrix over an exact or floating scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = T(1);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch");
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw std::invalid_argument("matrix sum shape mismatch");
    }
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      a.data_[i] += b.data_[i];
    }
    return a;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<std::complex<double>>;

inline Rational conjugate(const Rational& x) { return x; }
inline std::complex<double> conjugate(const std::complex<double>& x) { return std::conj(x); }

/// Conjugate transpose.
template <class T>
Matrix<T> adjoint(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(j, i) = conjugate(m(i, j));
    }
  }
  return out;
}

}  // namespace qchar

#endif  // QCHAR_MATRIX_HPP
