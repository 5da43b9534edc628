#include "spectra_chi/matrix.hpp"

namespace spectra_chi {

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

SymmetricMatrix::SymmetricMatrix(RealMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw std::invalid_argument("symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      if (m_(i, j) != m_(j, i)) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  }
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tol) : m_(m) {
  if (!m_.square()) throw std::invalid_argument("Hermitian matrix must be square");
  const double scale = std::max(1.0, max_abs(m_));
  const std::size_t n = m_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex a = m_(i, j);
      const Complex b = std::conj(m_(j, i));
      if (std::abs(a - b) > tol * scale) {
        throw std::invalid_argument("matrix is not Hermitian at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
      const Complex mean = 0.5 * (a + b);
      m_(i, j) = mean;
      m_(j, i) = std::conj(mean);
    }
  }
}

HermitianMatrix::HermitianMatrix(const SymmetricMatrix& m) : m_(to_complex(m.entries())) {}

bool HermitianMatrix::is_real() const {
  return std::all_of(m_.data().begin(), m_.data().end(),
                     [](const Complex& z) { return z.imag() == 0.0; });
}

SymmetricMatrix HermitianMatrix::real_part() const {
  RealMatrix out(order(), order());
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = 0; j < order(); ++j) out(i, j) = m_(i, j).real();
  }
  return SymmetricMatrix(std::move(out));
}

HermitianMatrix HermitianMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  HermitianMatrix out;
  out.m_ = ComplexMatrix(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) out.m_(a, b) = m_(indices[a], indices[b]);
  }
  return out;
}

HermitianMatrix HermitianMatrix::scaled(double factor) const {
  HermitianMatrix out = *this;
  out.m_ *= Complex(factor, 0.0);
  return out;
}

}  // namespace spectra_chi
