#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracle.hpp"
#include "spectra_chi/bounds.hpp"
#include "spectra_chi/error.hpp"
#include "spectra_chi/generators.hpp"
#include "spectra_chi/random.hpp"
#include "spectra_chi/spectral.hpp"

namespace spectra_chi {
namespace {

using testing::oracle_eigenvalues;

std::vector<EigenGroup> rounded(const Spectrum& s) {
  std::vector<EigenGroup> out = s.groups();
  for (auto& g : out) g.value = std::round(g.value * 1e6) / 1e6;
  return out;
}

void expect_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "index " << i;
}

RealMatrix random_symmetric(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = normal(rng);
  }
  return m;
}

TEST(Eigenvalues, CompleteGraph) {
  expect_close(eigenvalues_symmetric(adjacency_matrix(complete(4))), {3, -1, -1, -1}, 1e-12);
}

TEST(Eigenvalues, FiveCycleClosedForm) {
  std::vector<double> expected;
  for (int k = 0; k < 5; ++k) expected.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / 5));
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const auto got = eigenvalues_symmetric(adjacency_matrix(cycle(5)));
  expect_close(got, expected, 1e-12);
  expect_close(got, {2, 0.618034, 0.618034, -1.618034, -1.618034}, 1e-6);
}

TEST(Eigenvalues, Clebsch) {
  const Spectrum s = spectrum_of(clebsch());
  EXPECT_EQ(rounded(s), (std::vector<EigenGroup>{{5, 1}, {1, 10}, {-3, 5}}));
}

TEST(Eigenvalues, MatchIndependentSolver) {
  Rng rng(seed_from_env());
  for (std::size_t n : {1, 2, 5, 17, 40}) {
    const RealMatrix m = random_symmetric(n, rng);
    expect_close(eigenvalues_symmetric(SymmetricMatrix(m)), oracle_eigenvalues(m), 1e-10);
  }
  expect_close(eigenvalues_symmetric(adjacency_matrix(hoffman_singleton())),
               oracle_eigenvalues(adjacency_matrix(hoffman_singleton()).entries()), 1e-10);
}

TEST(Eigenvalues, ResidualContract) {
  Rng rng(seed_from_env());
  for (std::size_t n : {3, 12, 30}) {
    const SymmetricMatrix m(random_symmetric(n, rng));
    const auto eig = detail::jacobi_eigen(m);
    EXPECT_LE(detail::max_residual(m, eig), 1e-10 * std::max(1.0, frobenius_norm(m.entries())));
    EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end(), std::greater<>()));
  }
}

TEST(Eigenvalues, RejectsNonFinite) {
  RealMatrix m(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(eigenvalues_symmetric(SymmetricMatrix(m)), std::invalid_argument);
  m(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(eigenvalues_symmetric(SymmetricMatrix(m)), std::invalid_argument);
}

TEST(Eigenvalues, ZeroMatrix) { expect_close(eigenvalues_symmetric(SymmetricMatrix(RealMatrix(3, 3))), {0, 0, 0}, 0); }

TEST(SymmetricMatrix, RejectsAsymmetry) {
  RealMatrix m(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(SymmetricMatrix{m}, std::invalid_argument);
  EXPECT_THROW(SymmetricMatrix{RealMatrix(2, 3)}, std::invalid_argument);
}

TEST(Hermitian, IdentityAndPauli) {
  expect_close(eigenvalues_hermitian(HermitianMatrix(ComplexMatrix::identity(3))), {1, 1, 1}, 1e-12);
  ComplexMatrix y(2, 2);
  y(0, 1) = Complex(0, 1);
  y(1, 0) = Complex(0, -1);
  expect_close(eigenvalues_hermitian(HermitianMatrix(y)), {1, -1}, 1e-12);
}

TEST(Hermitian, RandomMatchesOracle) {
  Rng rng(seed_from_env());
  for (std::size_t n : {1, 3, 8, 15}) {
    const HermitianMatrix h = random_hermitian(n, rng);
    expect_close(eigenvalues_hermitian(h), oracle_eigenvalues(h.entries()), 1e-10);
  }
}

TEST(Hermitian, RealEmbeddingDoublesSpectrum) {
  Rng rng(seed_from_env());
  const HermitianMatrix h = random_hermitian(6, rng);
  RealMatrix embedded(12, 12);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      embedded(2 * i, 2 * j) = embedded(2 * i + 1, 2 * j + 1) = h(i, j).real();
      embedded(2 * i, 2 * j + 1) = -h(i, j).imag();
      embedded(2 * i + 1, 2 * j) = h(i, j).imag();
    }
  }
  const auto doubled = oracle_eigenvalues(embedded);
  const auto values = eigenvalues_hermitian(h);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_NEAR(values[i], doubled[2 * i], 1e-10);
    EXPECT_NEAR(values[i], doubled[2 * i + 1], 1e-10);
  }
}

TEST(Hermitian, ConstructionValidatesAndSymmetrizes) {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(1, 1);
  m(1, 0) = Complex(1, 1);  // should be conj
  EXPECT_THROW(HermitianMatrix{m}, std::invalid_argument);
  m(1, 0) = Complex(1, -1 + 1e-15);
  const HermitianMatrix h(m);
  EXPECT_EQ(h(0, 1), std::conj(h(1, 0)));
}

TEST(Spectrum, PetersenGroups) {
  EXPECT_EQ(rounded(spectrum_of(kneser(5, 2))), (std::vector<EigenGroup>{{3, 1}, {1, 5}, {-2, 4}}));
}

TEST(Spectrum, HoffmanSingletonGroups) {
  EXPECT_EQ(rounded(spectrum_of(hoffman_singleton())), (std::vector<EigenGroup>{{7, 1}, {2, 28}, {-3, 21}}));
}

TEST(Spectrum, UnitWeightsEqualUnweighted) {
  const Graph g = clebsch();
  const Spectrum plain = spectrum_of(g);
  const Spectrum weighted = spectrum_of(g, HermitianMatrix(adjacency_matrix(g)));
  expect_close(weighted.values(), plain.values(), 1e-12);
}

TEST(Spectrum, ComplexWeightsUseHermitianPath) {
  // Complex unit phases on the C4 edges.
  const Graph g = cycle(4);
  ComplexMatrix w(4, 4);
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (const auto& [u, v] : edges) {
    const Complex phase = (u == 3) ? Complex(0, 1) : Complex(1, 0);
    w(u, v) = phase * Complex(0, 1);
    w(v, u) = std::conj(w(u, v));
  }
  const auto values = spectrum_of(g, HermitianMatrix(w)).values();
  expect_close(values, oracle_eigenvalues(w), 1e-10);
}

TEST(Spectrum, WeightValidation) {
  const Graph g = cycle(4);
  ComplexMatrix w = to_complex(adjacency_matrix(g).entries());
  w(0, 2) = w(2, 0) = 1.0;  // not an edge
  EXPECT_THROW(spectrum_of(g, HermitianMatrix(w)), std::invalid_argument);
  EXPECT_THROW(spectrum_of(g, HermitianMatrix(ComplexMatrix::identity(3))), std::invalid_argument);
  // The diagonal of W is dropped by the Hadamard product.
  ComplexMatrix diag = to_complex(adjacency_matrix(g).entries());
  diag(0, 0) = 5.0;
  expect_close(spectrum_of(g, HermitianMatrix(diag)).values(), spectrum_of(g).values(), 1e-12);
}

TEST(Spectrum, Invariants) {
  Rng rng(seed_from_env());
  for (int trial = 0; trial < 20; ++trial) {
    const RealMatrix m = random_symmetric(1 + trial % 11, rng);
    const Spectrum s = Spectrum::from_values(eigenvalues_symmetric(SymmetricMatrix(m)));
    ASSERT_EQ(s.size(), m.rows());
    std::size_t total = 0;
    for (const auto& g : s.groups()) total += g.multiplicity;
    EXPECT_EQ(total, m.rows());
    EXPECT_NEAR(s.sum(), trace(m), static_cast<double>(m.rows()) * 1e-9);
    for (std::size_t i = 1; i < s.groups().size(); ++i) {
      EXPECT_GT(s.groups()[i - 1].value - s.groups()[i].value, s.tolerance());
    }
  }
}

TEST(Spectrum, GroupingChainsWithinTolerance) {
  const Spectrum s = Spectrum::from_values({1.0, 1.0 + 4e-9, 1.0 - 4e-9, -1.0}, 1e-8);
  ASSERT_EQ(s.groups().size(), 2U);
  EXPECT_EQ(s.groups()[0].multiplicity, 3U);
  EXPECT_EQ(s.mu(1), 1.0 + 4e-9);
  EXPECT_EQ(s.mu_up(1), -1.0);
  EXPECT_EQ(*s.mu2(), 1.0);
}

TEST(Spectrum, SmallestMultiplicity) {
  EXPECT_EQ(smallest_multiplicity(spectrum_of(clebsch())), 5U);
  EXPECT_EQ(smallest_multiplicity(srg_spectrum({27, 10, 1, 5})), 6U);
  EXPECT_EQ(smallest_multiplicity(spectrum_of(complete(4))), 3U);
}

TEST(Spectrum, KroneckerWithIdentityMultipliesMultiplicities) {
  Rng rng(seed_from_env());
  for (std::size_t n = 2; n <= 10; n += 2) {
    const Graph g = random_graph(n, 0.5, rng);
    const Spectrum base = spectrum_of(g);
    for (std::size_t d = 1; d <= 3; ++d) {
      const RealMatrix lifted = kron(adjacency_matrix(g).entries(), RealMatrix::identity(d));
      const Spectrum big = Spectrum::from_values(eigenvalues_symmetric(SymmetricMatrix(lifted)),
                                                 base.tolerance());
      ASSERT_EQ(big.groups().size(), base.groups().size());
      for (std::size_t i = 0; i < base.groups().size(); ++i) {
        EXPECT_NEAR(big.groups()[i].value, base.groups()[i].value, 1e-9);
        EXPECT_EQ(big.groups()[i].multiplicity, base.groups()[i].multiplicity * d);
      }
      // The c-th smallest of A equals the (c d)-th smallest of A (x) I_d.
      for (std::size_t c = 1; c <= n; ++c) EXPECT_NEAR(big.mu_up(c * d), base.mu_up(c), 1e-9);
    }
  }
}

TEST(Compress, IdentityAndBasisVector) {
  Rng rng(seed_from_env());
  const HermitianMatrix x = random_hermitian(4, rng);
  const HermitianMatrix same = compress(x, ComplexMatrix::identity(4));
  EXPECT_LE(max_abs(same.entries() - x.entries()), 1e-14);
  ComplexMatrix e1(4, 1);
  e1(0, 0) = 1.0;
  const HermitianMatrix corner = compress(x, e1);
  ASSERT_EQ(corner.order(), 1U);
  EXPECT_EQ(corner(0, 0), x(0, 0));
}

TEST(Compress, RejectsNonOrthonormal) {
  Rng rng(seed_from_env());
  const HermitianMatrix x = random_hermitian(3, rng);
  ComplexMatrix s(3, 2);
  s(0, 0) = 1.0;
  s(0, 1) = 1.0;
  EXPECT_THROW(compress(x, s), std::invalid_argument);
  EXPECT_THROW(compress(x, ComplexMatrix::identity(2)), std::invalid_argument);
}

// Interlacing: mu_i^up(X) <= mu_i^up(S^dag X S) and mu_i(X) >= mu_i(S^dag X S).
TEST(Compress, InterlacingProperty) {
  Rng rng(seed_from_env());
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const HermitianMatrix x = random_hermitian(n, rng);
    const ComplexMatrix s = random_orthonormal_columns(n, m, rng);
    const Spectrum full = Spectrum::from_values(eigenvalues_hermitian(x));
    const Spectrum small = Spectrum::from_values(eigenvalues_hermitian(compress(x, s)));
    for (std::size_t i = 1; i <= m; ++i) {
      EXPECT_LE(full.mu_up(i), small.mu_up(i) + 1e-8) << "trial " << trial;
      EXPECT_GE(full.mu(i), small.mu(i) - 1e-8) << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace spectra_chi
