#include "spectra_chi/generators.hpp"

#include <bit>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spectra_chi {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// All t-subsets of {0..p-1} as bitmasks, lexicographic on sorted elements.
void collect_subsets(int p, int t, int start, std::uint64_t mask,
                     std::vector<std::uint64_t>& out) {
  if (t == 0) {
    out.push_back(mask);
    return;
  }
  for (int e = start; e <= p - t; ++e) {
    collect_subsets(p, t - 1, e + 1, mask | (std::uint64_t{1} << e), out);
  }
}

}  // namespace

Graph kneser(int p, int t) {
  require(t >= 1 && p >= 2 * t, "kneser requires p >= 2t >= 2");
  require(p <= 64, "kneser supports p <= 64");
  std::vector<std::uint64_t> subsets;
  collect_subsets(p, t, 0, 0, subsets);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      if ((subsets[a] & subsets[b]) == 0) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(subsets.size(), edges,
                           "Kneser(" + std::to_string(p) + "," + std::to_string(t) + ")");
}

Graph cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

Graph complete(int n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  require(!part_sizes.empty(), "complete_multipartite requires at least one part");
  std::vector<int> part_of;
  std::string name = "K_{";
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    require(part_sizes[p] >= 1, "complete_multipartite part sizes must be >= 1");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
    name += (p ? "," : "") + std::to_string(part_sizes[p]);
  }
  name += "}";
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < part_of.size(); ++i) {
    for (std::size_t j = i + 1; j < part_of.size(); ++j) {
      if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(part_of.size(), edges, name);
}

Graph barbell(int m) {
  require(m >= 3, "barbell requires m >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(m + i, m + j);
    }
  }
  edges.emplace_back(m - 1, m);
  return Graph::from_edges(2 * m, edges, "Barbell(" + std::to_string(m) + ")");
}

Graph clebsch() {
  std::vector<Edge> edges;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = a + 1; b < 16; ++b) {
      const int w = std::popcount(a ^ b);
      if (w == 1 || w == 4) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(16, edges, "Clebsch");
}

Graph hoffman_singleton() {
  const auto pentagon = [](int h, int j) -> Vertex { return 5 * h + j; };
  const auto pentagram = [](int i, int j) -> Vertex { return 25 + 5 * i + j; };
  std::vector<Edge> edges;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      edges.emplace_back(pentagon(h, j), pentagon(h, (j + 1) % 5));
      edges.emplace_back(pentagram(h, j), pentagram(h, (j + 2) % 5));
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        edges.emplace_back(pentagon(h, j), pentagram(i, (h * i + j) % 5));
      }
    }
  }
  return Graph::from_edges(50, edges, "Hoffman-Singleton");
}

Graph orthogonality_graph(int n, const OrthogonalityOptions& options) {
  require(n >= 2 && n % 2 == 0, "orthogonality_graph requires even n >= 2");
  require(n < 63 && (std::size_t{1} << n) <= options.max_vertices,
          "orthogonality_graph: 2^" + std::to_string(n) + " vertices exceeds the cap of " +
              std::to_string(options.max_vertices));
  if (n % 4 != 0) {
    const std::string msg = "notice: Omega(" + std::to_string(n) +
                            ") with n not divisible by 4 has no claims attached";
    if (options.notice) {
      options.notice(msg);
    } else {
      std::clog << msg << '\n';
    }
  }
  const std::size_t count = std::size_t{1} << n;
  const int half = n / 2;
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      // dot product = n - 2 * (number of disagreeing coordinates)
      if (std::popcount(a ^ b) == half) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(count, edges, "Omega(" + std::to_string(n) + ")");
}

std::vector<int> orthogonality_vector(int n, Vertex v) {
  std::vector<int> z(n);
  for (int i = 0; i < n; ++i) z[i] = ((v >> i) & 1U) ? -1 : 1;
  return z;
}

}  // namespace spectra_chi
