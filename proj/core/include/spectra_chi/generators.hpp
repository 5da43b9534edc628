#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "spectra_chi/graph.hpp"

// Deterministic constructions for the graph families used in the bound
// reports. Vertex orderings are part of the contract: spectra, graph6 output
// and quantum colorings built on top of them are reproducible byte for byte.

namespace spectra_chi {

/// Kneser graph KG(p, t): t-subsets of {0..p-1} in lexicographic order,
/// adjacent iff disjoint. Requires p >= 2t >= 2.
Graph kneser(int p, int t);

/// C_n, n >= 3, edges i ~ i+1 mod n.
Graph cycle(int n);

/// K_n, n >= 1.
Graph complete(int n);

/// Complete multipartite graph; parts are consecutive vertex ranges.
Graph complete_multipartite(const std::vector<int>& part_sizes);

/// Two copies of K_m (vertices 0..m-1 and m..2m-1) joined by the bridge
/// (m-1, m). Requires m >= 3.
Graph barbell(int m);

/// Clebsch graph: 4-bit strings, adjacent iff their XOR has weight 1 or 4.
Graph clebsch();

/// Hoffman-Singleton graph from five pentagons P_h (vertices 5h+j) and five
/// pentagrams Q_i (vertices 25+5i+j); vertex j of P_h is joined to vertex
/// (h*i + j) mod 5 of Q_i.
Graph hoffman_singleton();

struct OrthogonalityOptions {
  /// Upper limit on 2^n.
  std::size_t max_vertices = 4096;
  /// Receives a notice when n is not divisible by 4. Defaults to std::clog.
  std::function<void(std::string_view)> notice;
};

/// Orthogonality graph Omega(n) on the 2^n vectors in {+1,-1}^n. Vertex b
/// carries the vector whose coordinate i is -1 iff bit i of b is set;
/// vertices are adjacent iff the vectors are orthogonal. Requires n even.
Graph orthogonality_graph(int n, const OrthogonalityOptions& options = {});

/// The +-1 vector carried by vertex `v` of orthogonality_graph(n).
std::vector<int> orthogonality_vector(int n, Vertex v);

}  // namespace spectra_chi
