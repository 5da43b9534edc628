#include "spectra_chi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spectra_chi/error.hpp"

namespace spectra_chi {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr double kResidualTolerance = 1e-10;

std::vector<EigenGroup> group_values(const std::vector<double>& desc, double tol) {
  std::vector<EigenGroup> groups;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < desc.size(); ++i) {
    if (i > 0 && desc[i - 1] - desc[i] > tol) {
      groups.push_back({sum / static_cast<double>(count), count});
      sum = 0.0;
      count = 0;
    }
    sum += desc[i];
    ++count;
  }
  if (count > 0) groups.push_back({sum / static_cast<double>(count), count});
  return groups;
}

}  // namespace

double default_grouping_tolerance(double mu1) { return 1e-8 * std::max(1.0, std::abs(mu1)); }

Spectrum Spectrum::from_values(std::vector<double> values, double tol) {
  if (values.empty()) throw std::invalid_argument("spectrum of an empty matrix");
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  s.tol_ = tol > 0.0 ? tol : default_grouping_tolerance(values.front());
  s.groups_ = group_values(values, s.tol_);
  s.values_ = std::move(values);
  return s;
}

Spectrum Spectrum::from_groups(const std::vector<EigenGroup>& groups, double tol) {
  std::vector<double> values;
  for (const auto& g : groups) values.insert(values.end(), g.multiplicity, g.value);
  return from_values(std::move(values), tol);
}

std::optional<double> Spectrum::mu2() const {
  if (values_.size() < 2) return std::nullopt;
  return values_[1];
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

Spectrum Spectrum::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("spectrum scale factor must be positive");
  std::vector<double> v = values_;
  for (auto& x : v) x *= factor;
  return from_values(std::move(v), tol_ * factor);
}

namespace detail {

EigenDecomposition jacobi_eigen(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) throw std::invalid_argument("eigenvalues of an empty matrix");
  for (const double x : m.entries().data()) {
    if (!std::isfinite(x)) throw std::invalid_argument("matrix has non-finite entries");
  }

  RealMatrix a = m.entries();
  RealMatrix v = RealMatrix::identity(n);
  const double norm = frobenius_norm(a);
  const double target = kOffDiagonalTolerance * norm;

  const auto off_norm = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * a(i, j) * a(i, j);
    }
    return std::sqrt(sum);
  };

  int sweeps = 0;
  while (off_norm() > target) {
    if (sweeps == kMaxSweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " +
                           std::to_string(kMaxSweeps) + " sweeps");
    }
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  out.sweeps = sweeps;
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

double max_residual(const SymmetricMatrix& m, const EigenDecomposition& eig) {
  const std::size_t n = m.order();
  double worst = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = -eig.values[col] * eig.vectors(i, col);
      for (std::size_t k = 0; k < n; ++k) r += m(i, k) * eig.vectors(k, col);
      sum += r * r;
    }
    worst = std::max(worst, std::sqrt(sum));
  }
  return worst;
}

}  // namespace detail

std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& m) {
  auto eig = detail::jacobi_eigen(m);
  const double bound = kResidualTolerance * std::max(1.0, frobenius_norm(m.entries()));
  const double residual = detail::max_residual(m, eig);
  if (!(residual <= bound)) {
    throw NumericalError("eigenpair residual " + std::to_string(residual) +
                         " exceeds the accuracy contract");
  }
  return std::move(eig.values);
}

std::vector<double> eigenvalues_hermitian(const HermitianMatrix& m) {
  const std::size_t n = m.order();
  RealMatrix embedded(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = m(i, j);
      embedded(2 * i, 2 * j) = z.real();
      embedded(2 * i, 2 * j + 1) = -z.imag();
      embedded(2 * i + 1, 2 * j) = z.imag();
      embedded(2 * i + 1, 2 * j + 1) = z.real();
    }
  }
  const auto doubled = eigenvalues_symmetric(SymmetricMatrix(std::move(embedded)));
  const double tol = default_grouping_tolerance(doubled.front());
  for (const auto& group : group_values(doubled, tol)) {
    if (group.multiplicity % 2 != 0) {
      throw NumericalError("real embedding has an odd multiplicity group near " +
                           std::to_string(group.value));
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return values;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  RealMatrix a(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return SymmetricMatrix(std::move(a));
}

HermitianMatrix weighted_adjacency(const Graph& g, const HermitianMatrix& weights) {
  const std::size_t n = g.order();
  if (weights.order() != n) {
    throw std::invalid_argument("weight matrix order " + std::to_string(weights.order()) +
                                " differs from graph order " + std::to_string(n));
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex w = weights(i, j);
      if (g.adjacent(i, j)) {
        out(i, j) = w;
      } else if (w != Complex{}) {
        throw std::invalid_argument("weight at (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") lies outside the edge set");
      }
    }
  }
  return HermitianMatrix(out, 0.0);
}

Spectrum spectrum_of(const Graph& g, const std::optional<HermitianMatrix>& weights, double tol) {
  if (!weights) return Spectrum::from_values(eigenvalues_symmetric(adjacency_matrix(g)), tol);
  const HermitianMatrix wa = weighted_adjacency(g, *weights);
  auto values = wa.is_real() ? eigenvalues_symmetric(wa.real_part()) : eigenvalues_hermitian(wa);
  return Spectrum::from_values(std::move(values), tol);
}

std::size_t smallest_multiplicity(const Spectrum& s) { return s.smallest_multiplicity(); }

HermitianMatrix compress(const HermitianMatrix& x, const ComplexMatrix& s) {
  if (s.rows() != x.order()) {
    throw std::invalid_argument("compress: column family has " + std::to_string(s.rows()) +
                                " rows, matrix has order " + std::to_string(x.order()));
  }
  const ComplexMatrix sd = adjoint(s);
  const ComplexMatrix gram = sd * s;
  if (max_abs(gram - ComplexMatrix::identity(s.cols())) > 1e-10) {
    throw std::invalid_argument("compress: columns are not orthonormal");
  }
  return HermitianMatrix(sd * x.entries() * s, 1e-10);
}

}  // namespace spectra_chi
