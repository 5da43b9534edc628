#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectra_chi/graph.hpp"
#include "spectra_chi/matrix.hpp"
#include "spectra_chi/spectral.hpp"

namespace spectra_chi {

/// A real-valued lower bound and the integer it implies for a chromatic number.
struct BoundValue {
  double value = 0.0;
  int bound = 0;
};

/// Ceiling, except that values within 1e-9 of an integer snap to it first.
int snapped_ceil(double x);

/// Smallest kappa >= 0 with mu_max + (sum of the kappa smallest eigenvalues)
/// <= tol. tol <= 0 selects 1e-9 * max(1, |mu_1|). The chromatic number and
/// the quantum chromatic number are both at least 1 + kappa.
int hoffman_kappa(const Spectrum& s, double tol = 0.0);

/// 1 + mu_1 / |mu_n| and its snapped ceiling. Throws std::domain_error when
/// mu_n >= 0 (no edges).
BoundValue ratio_bound(const Spectrum& s);

struct MultiplicityBound {
  std::size_t g = 0;  // multiplicity of mu_n
  bool defined = false;
  /// 1 + min{g, |mu_n| / mu_2} and its snapped ceiling, when mu_2 > 0.
  BoundValue bound;
  /// 1 + |mu_n| / mu_2 without the multiplicity cap, when mu_2 > 0.
  double ratio_only = 0.0;
  std::string reason;  // why the bound is undefined
};

/// 1 + min{g, |mu_n| / mu_2}; defined only when mu_2 exceeds the spectrum's
/// grouping tolerance.
MultiplicityBound multiplicity_bound(const Spectrum& s);

struct SrgParameters {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
};

std::string to_string(const SrgParameters& p);

/// Spectrum k^1, r^f, s^g of a strongly regular graph with the given
/// parameters. Throws std::invalid_argument naming the violated feasibility
/// condition.
Spectrum srg_spectrum(const SrgParameters& p);

/// SRG parameters of the Kneser graph KG(p, 2), p >= 4.
SrgParameters kneser_pair_parameters(int p);

/// Closed-form spectrum of KG(p, 2): ((p-2)(p-3)/2)^1, 1^{p(p-3)/2}, (3-p)^{p-1}.
Spectrum kneser_pair_spectrum(int p);

/// True iff 1 + mu_1/|mu_n| equals chi within 1e-9. Requires chi >= 2.
bool is_hoffman_coloring(const Spectrum& s, int chi);

struct BoundReport {
  std::string name;
  std::size_t n = 0;
  double mu1 = 0.0;
  std::optional<double> mu2;
  double mun = 0.0;
  std::size_t g = 0;

  int kappa = 0;
  int kappa_bound = 1;
  double ratio_bound_real = 1.0;
  int ratio_bound = 1;
  std::optional<double> mult_bound_real;
  std::optional<int> mult_bound;
  std::optional<double> mult_ratio_real;
  std::string mult_reason;
  bool mu2_positive = false;

  bool connected = true;
  std::vector<BoundReport> per_component;
  int best_lower_bound = 1;
};

/// All bounds from a spectrum alone (used for parameter-only SRG rows).
BoundReport bounds_from_spectrum(const Spectrum& s, std::string name = {});

/// Bounds for g (optionally for W o A). A disconnected graph is evaluated per
/// component; best_lower_bound is the maximum over components, and the
/// whole-graph numbers are kept with connected = false.
BoundReport bounds_report(const Graph& g,
                          const std::optional<HermitianMatrix>& weights = std::nullopt);

/// bounds_report over many graphs, up to `threads` at a time; results keep
/// the input order. threads == 0 uses the hardware concurrency.
std::vector<BoundReport> bounds_reports(std::span<const Graph> graphs, unsigned threads = 0);

}  // namespace spectra_chi
