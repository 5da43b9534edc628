#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "spectra_chi/graph.hpp"
#include "spectra_chi/matrix.hpp"

// Seeded generators for property tests and benchmarks.

namespace spectra_chi {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20190522;

/// Seed from the SPECTRA_CHI_SEED environment variable, else kDefaultSeed.
std::uint64_t seed_from_env();

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Hermitian matrix with standard normal real and imaginary parts.
HermitianMatrix random_hermitian(std::size_t n, Rng& rng);

/// n x m matrix with orthonormal columns: Gram-Schmidt of a Gaussian matrix.
ComplexMatrix random_orthonormal_columns(std::size_t n, std::size_t m, Rng& rng);

ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// `parts` orthogonal projectors of order n that sum to I_n, from a random
/// unitary whose columns are split into nonempty groups.
std::vector<ComplexMatrix> random_resolution_of_identity(std::size_t n, std::size_t parts, Rng& rng);

}  // namespace spectra_chi
