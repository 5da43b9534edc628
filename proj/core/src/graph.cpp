#include "spectra_chi/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace spectra_chi {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                        std::string name) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n * n, 0);
  g.neighbors_.resize(n);
  g.name_ = std::move(name);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }
    if (g.adj_[u * n + v] == 0) {
      g.adj_[u * n + v] = 1;
      g.adj_[v * n + u] = 1;
      ++g.edge_count_;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.adj_[u * n + v] != 0) g.neighbors_[u].push_back(v);
    }
  }
  return g;
}

Graph Graph::with_name(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : neighbors_) best = std::max(best, nb.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) sub.emplace_back(i, j);
    }
  }
  return from_edges(vertices.size(), sub, name_);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component;
    std::queue<Vertex> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      component.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

}  // namespace spectra_chi
