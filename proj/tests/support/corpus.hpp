#pragma once

// Graphs small enough for exact chromatic search.

#include <vector>

#include "spectra_chi/generators.hpp"
#include "spectra_chi/random.hpp"

namespace spectra_chi::testing {

inline std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (int n : {3, 4, 5, 6, 7, 9}) out.push_back(cycle(n));
  for (int n : {2, 4, 6}) out.push_back(complete(n));
  out.push_back(complete_multipartite({2, 2, 2, 2}));
  out.push_back(complete_multipartite({1, 2, 3}));
  out.push_back(complete_multipartite({3, 4, 5}));
  for (int m : {3, 4, 5}) out.push_back(barbell(m));
  for (int p : {4, 5, 6}) out.push_back(kneser(p, 2));
  out.push_back(clebsch());
  Rng rng(seed_from_env());
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 8 + static_cast<std::size_t>(i) % 12;  // 8..19
    const double p = 0.2 + 0.03 * static_cast<double>(i % 10);
    out.push_back(random_graph(n, p, rng).with_name("random" + std::to_string(i)));
  }
  return out;
}

}  // namespace spectra_chi::testing
