#include "spectra_chi/random.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spectra_chi {

std::uint64_t seed_from_env() {
  if (const char* text = std::getenv("SPECTRA_CHI_SEED"); text != nullptr && *text != '\0') {
    return std::stoull(text);
  }
  return kDefaultSeed;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges, "G(" + std::to_string(n) + "," + std::to_string(p) + ")");
}

HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = normal(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianMatrix(m);
}

ComplexMatrix random_orthonormal_columns(std::size_t n, std::size_t m, Rng& rng) {
  if (m > n) throw std::invalid_argument("cannot fit more orthonormal columns than rows");
  std::normal_distribution<double> normal;
  ComplexMatrix q(n, m);
  for (std::size_t col = 0; col < m; ++col) {
    double norm = 0.0;
    // Resample in the (measure zero) event of a degenerate draw.
    while (norm < 1e-6) {
      for (std::size_t i = 0; i < n; ++i) q(i, col) = Complex(normal(rng), normal(rng));
      // Two passes of modified Gram-Schmidt.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t prev = 0; prev < col; ++prev) {
          Complex dot{};
          for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, prev)) * q(i, col);
          for (std::size_t i = 0; i < n; ++i) q(i, col) -= dot * q(i, prev);
        }
      }
      norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, col));
      norm = std::sqrt(norm);
    }
    for (std::size_t i = 0; i < n; ++i) q(i, col) /= norm;
  }
  return q;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) { return random_orthonormal_columns(n, n, rng); }

std::vector<ComplexMatrix> random_resolution_of_identity(std::size_t n, std::size_t parts, Rng& rng) {
  if (parts == 0 || parts > n) throw std::invalid_argument("need 1 <= parts <= n");
  const ComplexMatrix u = random_unitary(n, rng);
  // Column j goes to part j mod parts so that every part is nonempty.
  std::vector<ComplexMatrix> out(parts, ComplexMatrix(n, n));
  for (std::size_t col = 0; col < n; ++col) {
    ComplexMatrix& p = out[col % parts];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) += u(i, col) * std::conj(u(j, col));
    }
  }
  return out;
}

}  // namespace spectra_chi
