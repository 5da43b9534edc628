#include "spectra_chi/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spectra_chi/generators.hpp"
#include "spectra_chi/spectral.hpp"

namespace spectra_chi {
namespace {

void check_order(const Graph& g, const QuantumColoring& qc) {
  if (qc.vertices() != g.order()) {
    throw std::invalid_argument("quantum coloring has " + std::to_string(qc.vertices()) +
                                " vertices, graph has " + std::to_string(g.order()));
  }
}

double frobenius_squared(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& z : m.data()) sum += std::norm(z);
  return sum;
}

}  // namespace

QuantumColoring::QuantumColoring(std::size_t n, std::size_t c, std::size_t d,
                                 std::vector<ComplexMatrix> projectors)
    : n_(n), c_(c), d_(d), projectors_(std::move(projectors)) {
  if (c_ == 0 || d_ == 0) throw std::invalid_argument("quantum coloring needs c >= 1 and d >= 1");
  if (projectors_.size() != n_ * c_) {
    throw std::invalid_argument("expected " + std::to_string(n_ * c_) + " projectors, got " +
                                std::to_string(projectors_.size()));
  }
  for (const auto& p : projectors_) {
    if (p.rows() != d_ || p.cols() != d_) {
      throw std::invalid_argument("projector is " + std::to_string(p.rows()) + "x" +
                                  std::to_string(p.cols()) + ", expected " + std::to_string(d_) +
                                  "x" + std::to_string(d_));
    }
  }
}

VerificationReport verify(const Graph& g, const QuantumColoring& qc, double tol) {
  check_order(g, qc);
  VerificationReport r;
  r.tolerance = tol;
  const std::size_t d = qc.dimension();
  const ComplexMatrix identity = ComplexMatrix::identity(d);

  for (Vertex v = 0; v < qc.vertices(); ++v) {
    ComplexMatrix sum(d, d);
    for (std::size_t k = 0; k < qc.colors(); ++k) {
      const ComplexMatrix& p = qc.projector(v, k);
      r.projector_residual = std::max(
          {r.projector_residual, frobenius_norm(p * p - p), frobenius_norm(p - adjoint(p))});
      sum += p;
    }
    r.completeness_residual = std::max(r.completeness_residual, frobenius_norm(sum - identity));
  }
  for (const auto& [v, w] : g.edges()) {
    for (std::size_t k = 0; k < qc.colors(); ++k) {
      r.orthogonality_residual =
          std::max(r.orthogonality_residual, frobenius_norm(qc.projector(v, k) * qc.projector(w, k)));
    }
  }
  r.pinching_residual = pinching_residual_blockwise(g, qc);
  r.pass = r.projector_residual <= tol && r.completeness_residual <= tol &&
           r.orthogonality_residual <= tol && r.pinching_residual <= tol;
  return r;
}

QuantumColoring classical_to_quantum(const Graph& g, const Coloring& coloring) {
  const std::size_t n = g.order();
  if (coloring.assignment.size() != n) {
    throw std::invalid_argument("coloring assigns " + std::to_string(coloring.assignment.size()) +
                                " vertices, graph has " + std::to_string(n));
  }
  if (coloring.colors < 1) throw std::invalid_argument("coloring uses no colors");
  const auto c = static_cast<std::size_t>(coloring.colors);
  std::vector<ComplexMatrix> projectors(n * c, ComplexMatrix(1, 1));
  for (Vertex v = 0; v < n; ++v) {
    const int color = coloring.assignment[v];
    if (color < 0 || color >= coloring.colors) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has no color in [0, " +
                                  std::to_string(coloring.colors) + ")");
    }
    projectors[v * c + static_cast<std::size_t>(color)](0, 0) = 1.0;
  }
  return QuantumColoring(n, c, 1, std::move(projectors));
}

QuantumColoring omega_coloring(int n, std::size_t max_nd) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even");
  if (n >= 32 || (std::size_t{1} << n) * static_cast<std::size_t>(n) > max_nd) {
    throw std::invalid_argument("omega_coloring: 2^n * n exceeds the cap of " + std::to_string(max_nd));
  }
  const std::size_t vertices = std::size_t{1} << n;
  const auto dim = static_cast<std::size_t>(n);
  // Powers of w = exp(2 pi i / n), indexed by exponent mod n.
  std::vector<Complex> root(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    root[m] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / n);
  }
  const double scale = 1.0 / n;
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(vertices * dim);
  for (Vertex v = 0; v < vertices; ++v) {
    const auto z = orthogonality_vector(n, v);
    for (std::size_t k = 0; k < dim; ++k) {
      ComplexMatrix p(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          const std::size_t exponent = (k * (i + dim - j)) % dim;
          p(i, j) = root[exponent] * (scale * z[i] * z[j]);
        }
      }
      projectors.push_back(std::move(p));
    }
  }
  return QuantumColoring(vertices, dim, dim, std::move(projectors));
}

std::vector<ComplexMatrix> block_projectors(const QuantumColoring& qc, std::size_t max_nd) {
  const std::size_t n = qc.vertices();
  const std::size_t d = qc.dimension();
  if (n * d > max_nd) {
    throw std::invalid_argument("block projectors of order " + std::to_string(n * d) +
                                " exceed the cap of " + std::to_string(max_nd));
  }
  std::vector<ComplexMatrix> out;
  out.reserve(qc.colors());
  for (std::size_t k = 0; k < qc.colors(); ++k) {
    ComplexMatrix p(n * d, n * d);
    for (Vertex v = 0; v < n; ++v) {
      const ComplexMatrix& block = qc.projector(v, k);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) p(v * d + i, v * d + j) = block(i, j);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

HermitianMatrix pinch(const HermitianMatrix& x, std::span<const ComplexMatrix> projectors) {
  const std::size_t m = x.order();
  ComplexMatrix resolution(m, m);
  for (const auto& p : projectors) {
    if (p.rows() != m || p.cols() != m) {
      throw std::invalid_argument("pinch: projector order differs from matrix order " + std::to_string(m));
    }
    resolution += p;
  }
  if (frobenius_norm(resolution - ComplexMatrix::identity(m)) > 1e-8) {
    throw std::invalid_argument("pinch: projectors do not resolve the identity");
  }
  ComplexMatrix out(m, m);
  for (const auto& p : projectors) out += p * x.entries() * p;
  return HermitianMatrix(out, 1e-8);
}

double pinching_residual_blockwise(const Graph& g, const QuantumColoring& qc) {
  check_order(g, qc);
  const std::size_t d = qc.dimension();
  double sum = 0.0;
  for (const auto& [v, w] : g.edges()) {
    ComplexMatrix vw(d, d);
    ComplexMatrix wv(d, d);
    for (std::size_t k = 0; k < qc.colors(); ++k) {
      vw += qc.projector(v, k) * qc.projector(w, k);
      wv += qc.projector(w, k) * qc.projector(v, k);
    }
    sum += frobenius_squared(vw) + frobenius_squared(wv);
  }
  return std::sqrt(sum);
}

double pinching_residual_dense(const Graph& g, const QuantumColoring& qc, std::size_t max_nd) {
  check_order(g, qc);
  const auto blocks = block_projectors(qc, max_nd);
  const ComplexMatrix lifted =
      kron(to_complex(adjacency_matrix(g).entries()), ComplexMatrix::identity(qc.dimension()));
  ComplexMatrix sum(lifted.rows(), lifted.cols());
  for (const auto& p : blocks) sum += p * lifted * p;
  return frobenius_norm(sum);
}

QuantumColoring conjugate(const QuantumColoring& qc, const ComplexMatrix& u) {
  const std::size_t d = qc.dimension();
  if (u.rows() != d || u.cols() != d) {
    throw std::invalid_argument("conjugate: unitary must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  const ComplexMatrix ud = adjoint(u);
  if (frobenius_norm(ud * u - ComplexMatrix::identity(d)) > 1e-10) {
    throw std::invalid_argument("conjugate: matrix is not unitary");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(qc.projectors().size());
  for (const auto& p : qc.projectors()) out.push_back(u * p * ud);
  return QuantumColoring(qc.vertices(), qc.colors(), d, std::move(out));
}

}  // namespace spectra_chi
