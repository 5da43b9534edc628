#include "spectra_chi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace spectra_chi {
namespace {

constexpr double kSnap = 1e-9;
constexpr double kMultiplicitySnap = 1e-6;

bool has_edges(const Spectrum& s) { return s.mu_min() < -s.tolerance(); }

int best_of(const BoundReport& r) {
  int best = std::max(r.kappa_bound, r.ratio_bound);
  if (r.mult_bound) best = std::max(best, *r.mult_bound);
  return best;
}

}  // namespace

int snapped_ceil(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= kSnap) return static_cast<int>(nearest);
  return static_cast<int>(std::ceil(x));
}

int hoffman_kappa(const Spectrum& s, double tol) {
  if (tol <= 0.0) tol = kSnap * std::max(1.0, std::abs(s.mu_max()));
  double sum = s.mu_max();
  if (sum <= tol) return 0;
  const std::size_t n = s.size();
  for (std::size_t kappa = 1; kappa < n; ++kappa) {
    sum += s.mu_up(kappa);
    if (sum <= tol) return static_cast<int>(kappa);
  }
  throw std::domain_error("no kappa exists: mu_max plus the n-1 smallest eigenvalues is positive");
}

BoundValue ratio_bound(const Spectrum& s) {
  if (!has_edges(s)) throw std::domain_error("ratio bound needs mu_n < 0 (graph has no edges)");
  const double value = 1.0 + s.mu_max() / std::abs(s.mu_min());
  return {value, snapped_ceil(value)};
}

MultiplicityBound multiplicity_bound(const Spectrum& s) {
  MultiplicityBound out;
  out.g = s.smallest_multiplicity();
  const auto mu2 = s.mu2();
  if (!mu2) {
    out.reason = "fewer than two eigenvalues";
    return out;
  }
  if (!(*mu2 > s.tolerance())) {
    out.reason = "mu_2 is not positive";
    return out;
  }
  const double quotient = std::abs(s.mu_min()) / *mu2;
  out.defined = true;
  out.ratio_only = 1.0 + quotient;
  out.bound.value = 1.0 + std::min(static_cast<double>(out.g), quotient);
  out.bound.bound = snapped_ceil(out.bound.value);
  return out;
}

std::string to_string(const SrgParameters& p) {
  return "SRG(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

Spectrum srg_spectrum(const SrgParameters& p) {
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument(to_string(p) + " is infeasible: " + why);
  };
  if (p.n < 2 || p.k < 0 || p.k >= p.n || p.lambda < 0 || p.mu < 0) {
    fail("need n >= 2, 0 <= k < n and lambda, mu >= 0");
  }
  const long long lhs = static_cast<long long>(p.n - p.k - 1) * p.mu;
  const long long rhs = static_cast<long long>(p.k) * (p.k - p.lambda - 1);
  if (lhs != rhs) fail("(n-k-1)*mu = k*(k-lambda-1) does not hold");
  const double n = p.n, k = p.k, lambda = p.lambda, mu = p.mu;
  const double disc = (lambda - mu) * (lambda - mu) + 4.0 * (k - mu);
  if (disc < 0.0) fail("discriminant (lambda-mu)^2 + 4(k-mu) is negative");
  if (disc == 0.0) fail("discriminant (lambda-mu)^2 + 4(k-mu) is zero");
  const double root = std::sqrt(disc);
  const double r = 0.5 * ((lambda - mu) + root);
  const double s = 0.5 * ((lambda - mu) - root);
  // f + g = n - 1 and k + f r + g s = 0
  const double f = 0.5 * ((n - 1.0) - (2.0 * k + (n - 1.0) * (lambda - mu)) / root);
  const double g = (n - 1.0) - f;
  const double f_round = std::round(f);
  const double g_round = std::round(g);
  if (std::abs(f - f_round) > kMultiplicitySnap || std::abs(g - g_round) > kMultiplicitySnap ||
      f_round < 0.0 || g_round < 0.0) {
    fail("eigenvalue multiplicities f = " + std::to_string(f) + ", g = " + std::to_string(g) +
         " are not nonnegative integers");
  }
  std::vector<EigenGroup> groups{{k, 1}};
  if (f_round > 0.0) groups.push_back({r, static_cast<std::size_t>(f_round)});
  if (g_round > 0.0) groups.push_back({s, static_cast<std::size_t>(g_round)});
  return Spectrum::from_groups(groups);
}

SrgParameters kneser_pair_parameters(int p) {
  if (p < 4) throw std::invalid_argument("kneser_pair_parameters requires p >= 4");
  const auto choose2 = [](int m) { return m * (m - 1) / 2; };
  return {choose2(p), choose2(p - 2), choose2(p - 4), choose2(p - 3)};
}

Spectrum kneser_pair_spectrum(int p) {
  if (p < 4) throw std::invalid_argument("kneser_pair_spectrum requires p >= 4");
  return Spectrum::from_groups({{(p - 2) * (p - 3) / 2.0, 1},
                                {1.0, static_cast<std::size_t>(p * (p - 3) / 2)},
                                {3.0 - p, static_cast<std::size_t>(p - 1)}});
}

bool is_hoffman_coloring(const Spectrum& s, int chi) {
  if (chi < 2) throw std::invalid_argument("is_hoffman_coloring requires chi >= 2");
  if (!has_edges(s)) return false;
  return std::abs(ratio_bound(s).value - chi) <= kSnap;
}

BoundReport bounds_from_spectrum(const Spectrum& s, std::string name) {
  BoundReport r;
  r.name = std::move(name);
  r.n = s.size();
  r.mu1 = s.mu_max();
  r.mu2 = s.mu2();
  r.mun = s.mu_min();
  r.g = s.smallest_multiplicity();
  r.kappa = hoffman_kappa(s);
  r.kappa_bound = 1 + r.kappa;
  if (has_edges(s)) {
    const auto ratio = ratio_bound(s);
    r.ratio_bound_real = ratio.value;
    r.ratio_bound = ratio.bound;
  }
  const auto mult = multiplicity_bound(s);
  r.mu2_positive = mult.defined;
  if (mult.defined) {
    r.mult_bound_real = mult.bound.value;
    r.mult_bound = mult.bound.bound;
    r.mult_ratio_real = mult.ratio_only;
  } else {
    r.mult_reason = mult.reason;
  }
  r.best_lower_bound = best_of(r);
  return r;
}

BoundReport bounds_report(const Graph& g, const std::optional<HermitianMatrix>& weights) {
  if (g.order() == 0) throw std::invalid_argument("bounds_report: graph has no vertices");
  BoundReport whole = bounds_from_spectrum(spectrum_of(g, weights), g.name());
  const auto components = connected_components(g);
  if (components.size() <= 1) return whole;

  whole.connected = false;
  whole.best_lower_bound = 1;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const Graph sub = g.induced(components[c]);
    std::optional<HermitianMatrix> sub_weights;
    if (weights) sub_weights = weights->principal_submatrix(components[c]);
    BoundReport part = bounds_from_spectrum(spectrum_of(sub, sub_weights),
                                            g.name() + "#" + std::to_string(c));
    whole.best_lower_bound = std::max(whole.best_lower_bound, part.best_lower_bound);
    whole.per_component.push_back(std::move(part));
  }
  return whole;
}

std::vector<BoundReport> bounds_reports(std::span<const Graph> graphs, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<BoundReport> out(graphs.size());
  for (std::size_t start = 0; start < graphs.size(); start += threads) {
    const std::size_t stop = std::min(graphs.size(), start + threads);
    std::vector<std::future<BoundReport>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, [&graphs, i] { return bounds_report(graphs[i]); }));
    }
    for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
  }
  return out;
}

}  // namespace spectra_chi
