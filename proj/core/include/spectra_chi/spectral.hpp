#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spectra_chi/graph.hpp"
#include "spectra_chi/matrix.hpp"

namespace spectra_chi {

struct EigenGroup {
  double value = 0.0;  // mean of the clustered eigenvalues
  std::size_t multiplicity = 0;

  friend bool operator==(const EigenGroup&, const EigenGroup&) = default;
};

/// Default multiplicity-grouping tolerance for a spectrum with top eigenvalue mu1.
double default_grouping_tolerance(double mu1);

/// Eigenvalues sorted descending, clustered into multiplicity groups. Adjacent
/// sorted values closer than `tol` share a group.
class Spectrum {
 public:
  Spectrum() = default;

  /// Sorts `values` descending and groups them; tol <= 0 selects the default.
  static Spectrum from_values(std::vector<double> values, double tol = 0.0);
  static Spectrum from_groups(const std::vector<EigenGroup>& groups, double tol = 0.0);

  const std::vector<double>& values() const { return values_; }
  const std::vector<EigenGroup>& groups() const { return groups_; }
  double tolerance() const { return tol_; }
  std::size_t size() const { return values_.size(); }

  /// i-th largest eigenvalue, 1-based.
  double mu(std::size_t i) const { return values_.at(i - 1); }
  /// i-th smallest eigenvalue, 1-based.
  double mu_up(std::size_t i) const { return values_.at(values_.size() - i); }
  double mu_max() const { return values_.front(); }
  double mu_min() const { return values_.back(); }
  /// Second largest eigenvalue counted with multiplicity; empty when n < 2.
  std::optional<double> mu2() const;
  /// Multiplicity of the lowest group.
  std::size_t smallest_multiplicity() const { return groups_.back().multiplicity; }
  double sum() const;

  /// Spectrum with every eigenvalue multiplied by `factor` > 0.
  Spectrum scaled(double factor) const;

 private:
  std::vector<double> values_;
  std::vector<EigenGroup> groups_;
  double tol_ = 0.0;
};

/// All eigenvalues, descending. Cyclic Jacobi to convergence; every eigenpair
/// is checked against max ||A x - lambda x|| <= 1e-10 * max(1, ||A||_F).
/// Throws std::invalid_argument on non-finite entries or an empty matrix and
/// NumericalError when the residual contract is not met.
std::vector<double> eigenvalues_symmetric(const SymmetricMatrix& m);

/// Eigenvalues of a Hermitian matrix via its 2n x 2n real embedding
/// a+bi -> [[a,-b],[b,a]], whose spectrum doubles every multiplicity.
/// Throws NumericalError if an embedding group has odd multiplicity.
std::vector<double> eigenvalues_hermitian(const HermitianMatrix& m);

/// 0/1 adjacency matrix.
SymmetricMatrix adjacency_matrix(const Graph& g);

/// Hadamard product W o A. Nonzero weights off the edge set are rejected;
/// the diagonal of W is discarded since A has none.
HermitianMatrix weighted_adjacency(const Graph& g, const HermitianMatrix& weights);

/// Spectrum of A, or of W o A when weights are given. `tol` <= 0 selects
/// default_grouping_tolerance(mu1).
Spectrum spectrum_of(const Graph& g, const std::optional<HermitianMatrix>& weights = std::nullopt,
                     double tol = 0.0);

std::size_t smallest_multiplicity(const Spectrum& s);

/// S^dagger X S for an n x m matrix S with orthonormal columns (Gram matrix
/// within 1e-10 of I_m in max-entry norm; std::invalid_argument otherwise).
HermitianMatrix compress(const HermitianMatrix& x, const ComplexMatrix& s);

namespace detail {

struct EigenDecomposition {
  std::vector<double> values;  // descending
  RealMatrix vectors;          // column i pairs with values[i]
  int sweeps = 0;
};

EigenDecomposition jacobi_eigen(const SymmetricMatrix& m);

/// max_i ||A x_i - lambda_i x_i||_2
double max_residual(const SymmetricMatrix& m, const EigenDecomposition& eig);

}  // namespace detail

}  // namespace spectra_chi
