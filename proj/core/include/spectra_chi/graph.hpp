#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace spectra_chi {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 stored as a dense symmetric
/// 0/1 adjacency relation with an all-false diagonal. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph with exactly the given edges. Duplicate pairs (in
  /// either orientation) collapse. Throws std::invalid_argument for an
  /// endpoint outside [0, n) or a loop.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::string name = {});

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  const std::string& name() const { return name_; }
  Graph with_name(std::string name) const;

  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
  std::size_t max_degree() const;
  /// Neighbors of v in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
  Graph induced(const std::vector<Vertex>& vertices) const;

  /// Equality of labelled graphs; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::string name_;
};

/// Maximal connected vertex sets, each sorted ascending, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace spectra_chi
