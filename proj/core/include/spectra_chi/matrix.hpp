#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace spectra_chi {

using Complex = std::complex<double>;

/// Dense row-major matrix. Shapes are checked on every binary operation.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  DenseMatrix& operator+=(const DenseMatrix& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  DenseMatrix& operator*=(T scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, T scalar) { return a *= scalar; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  void check_same_shape(const DenseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw std::invalid_argument("matrix shapes differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<Complex>;

inline double conj_value(double x) { return x; }
inline Complex conj_value(const Complex& x) { return std::conj(x); }

/// Conjugate transpose (plain transpose for real matrices).
template <typename T>
DenseMatrix<T> adjoint(const DenseMatrix<T>& m) {
  DenseMatrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = conj_value(m(i, j));
  }
  return out;
}

template <typename T>
double frobenius_norm(const DenseMatrix<T>& m) {
  double sum = 0.0;
  for (const auto& x : m.data()) sum += std::norm(x);
  return std::sqrt(sum);
}

template <typename T>
double max_abs(const DenseMatrix<T>& m) {
  double best = 0.0;
  for (const auto& x : m.data()) best = std::max(best, static_cast<double>(std::abs(x)));
  return best;
}

template <typename T>
T trace(const DenseMatrix<T>& m) {
  T sum{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) sum += m(i, i);
  return sum;
}

/// Kronecker product a (x) b.
template <typename T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      if (aij == T{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix to_complex(const RealMatrix& m);

/// Real symmetric matrix; symmetry is exact (checked on construction).
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  /// Throws std::invalid_argument unless m is square with m(i,j) == m(j,i).
  explicit SymmetricMatrix(RealMatrix m);

  std::size_t order() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RealMatrix& entries() const { return m_; }

 private:
  RealMatrix m_;
};

/// Complex Hermitian matrix. Construction accepts input that is Hermitian up
/// to rounding and symmetrizes it so that h(i,j) == conj(h(j,i)) exactly.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Throws std::invalid_argument if m is not square, or if
  /// max |m - m^dagger| exceeds `tol * max(1, max|m|)`.
  explicit HermitianMatrix(const ComplexMatrix& m, double tol = 1e-12);
  explicit HermitianMatrix(const SymmetricMatrix& m);

  std::size_t order() const { return m_.rows(); }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& entries() const { return m_; }

  /// True when every imaginary part is exactly zero.
  bool is_real() const;
  /// Real part; meaningful as a symmetric matrix for any Hermitian input.
  SymmetricMatrix real_part() const;
  HermitianMatrix principal_submatrix(std::span<const std::size_t> indices) const;
  HermitianMatrix scaled(double factor) const;

 private:
  ComplexMatrix m_;
};

}  // namespace spectra_chi
