#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectra_chi/chromatic.hpp"
#include "spectra_chi/graph.hpp"
#include "spectra_chi/matrix.hpp"

namespace spectra_chi {

inline constexpr std::size_t kDefaultBlockCap = 4096;
inline constexpr double kDefaultVerifyTolerance = 1e-9;

/// Family {P_{v,k}} of d x d complex matrices, one per (vertex, color).
/// Shapes are validated on construction; the projector, completeness and
/// orthogonality conditions are checked by verify().
class QuantumColoring {
 public:
  QuantumColoring() = default;
  /// `projectors[v * c + k]` is P_{v,k}. Throws std::invalid_argument if the
  /// count is not n*c or any matrix is not d x d.
  QuantumColoring(std::size_t n, std::size_t c, std::size_t d, std::vector<ComplexMatrix> projectors);

  std::size_t vertices() const { return n_; }
  std::size_t colors() const { return c_; }
  std::size_t dimension() const { return d_; }
  const ComplexMatrix& projector(Vertex v, std::size_t k) const { return projectors_[v * c_ + k]; }
  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }

 private:
  std::size_t n_ = 0;
  std::size_t c_ = 0;
  std::size_t d_ = 0;
  std::vector<ComplexMatrix> projectors_;
};

struct VerificationReport {
  double projector_residual = 0.0;      // max ||P^2 - P||_F, ||P - P^dagger||_F
  double completeness_residual = 0.0;   // max_v ||sum_k P_{v,k} - I||_F
  double orthogonality_residual = 0.0;  // max over edges vw, colors k of ||P_{v,k} P_{w,k}||_F
  double pinching_residual = 0.0;       // ||sum_k P_k (A (x) I_d) P_k||_F
  double tolerance = 0.0;
  bool pass = false;
};

/// Checks qc against g. pass iff every residual is <= tol.
VerificationReport verify(const Graph& g, const QuantumColoring& qc,
                          double tol = kDefaultVerifyTolerance);

/// d = 1 embedding: P_{v,k} = [1] if v has color k, else [0]. Throws
/// std::invalid_argument for an unassigned or out-of-range vertex.
QuantumColoring classical_to_quantum(const Graph& g, const Coloring& coloring);

/// n-color quantum coloring of orthogonality_graph(n) in dimension n:
/// P_{v,k} = U^k z_v z_v^dagger U^{-k} / n with U = diag(1, w, ..., w^{n-1}),
/// w = exp(2 pi i / n), k = 0..n-1. Requires n even and 2^n * n <= max_nd.
QuantumColoring omega_coloring(int n, std::size_t max_nd = kDefaultBlockCap);

/// The c block-diagonal projectors P_k = sum_v e_v e_v^dagger (x) P_{v,k} of
/// order n*d. Throws std::invalid_argument if n*d > max_nd.
std::vector<ComplexMatrix> block_projectors(const QuantumColoring& qc,
                                            std::size_t max_nd = kDefaultBlockCap);

/// Pinching X -> sum_k P_k X P_k. The projectors must share X's order and
/// sum to the identity within 1e-8.
HermitianMatrix pinch(const HermitianMatrix& x, std::span<const ComplexMatrix> projectors);

/// Frobenius norm of sum_k P_k (A (x) I_d) P_k assembled from the (v, w)
/// blocks A_vw * sum_k P_{v,k} P_{w,k}.
double pinching_residual_blockwise(const Graph& g, const QuantumColoring& qc);

/// Same quantity from the materialized nd x nd matrices.
double pinching_residual_dense(const Graph& g, const QuantumColoring& qc,
                               std::size_t max_nd = kDefaultBlockCap);

/// P'_{v,k} = u P_{v,k} u^dagger. Requires ||u^dagger u - I||_F <= 1e-10.
QuantumColoring conjugate(const QuantumColoring& qc, const ComplexMatrix& u);

}  // namespace spectra_chi
