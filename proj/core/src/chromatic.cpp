#include "spectra_chi/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spectra_chi {
namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  CliqueResult run() {
    std::vector<Vertex> candidates(g_.order());
    std::iota(candidates.begin(), candidates.end(), 0);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    std::vector<Vertex> current;
    if (!candidates.empty()) expand(candidates, current);
    CliqueResult out;
    out.clique = best_;
    std::sort(out.clique.begin(), out.clique.end());
    out.size = static_cast<int>(best_.size());
    out.exact = !aborted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  // Greedy color classes over `candidates`; returns vertices in class order
  // with the class number (1-based) of each.
  void color_sort(const std::vector<Vertex>& candidates, std::vector<Vertex>& order,
                  std::vector<int>& bound) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : candidates) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](const std::vector<Vertex>& cls) {
        return std::none_of(cls.begin(), cls.end(), [&](Vertex w) { return g_.adjacent(v, w); });
      });
      if (it == classes.end()) {
        classes.push_back({v});
      } else {
        it->push_back(v);
      }
    }
    order.clear();
    bound.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (Vertex v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c + 1));
      }
    }
  }

  void expand(const std::vector<Vertex>& candidates, std::vector<Vertex>& current) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> bound;
    color_sort(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (g_.adjacent(v, order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      if (aborted_) return;
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Vertex> best_;
};

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, std::uint64_t budget)
      : g_(g),
        n_(g.order()),
        budget_(budget),
        color_(n_, -1),
        neighbor_colors_(n_ * std::max<std::size_t>(n_, 1), 0),
        saturation_(n_, 0) {}

  ChromaticResult run() {
    ChromaticResult out;
    if (n_ == 0) {
      out.exact = true;
      return out;
    }
    best_ = heuristic();
    upper_ = best_.colors;

    const CliqueResult clique = clique_number(g_, budget_);
    lower_ = std::max(1, clique.size);
    nodes_ = clique.nodes;

    if (lower_ < upper_) {
      // Clique vertices need distinct colors; fixing them breaks color symmetry.
      for (std::size_t i = 0; i < clique.clique.size(); ++i) assign(clique.clique[i], static_cast<int>(i));
      search(clique.clique.size(), clique.size);
    }
    out.coloring = best_;
    out.upper = upper_;
    out.exact = !aborted_;
    out.lower = out.exact ? upper_ : lower_;
    out.nodes = nodes_;
    return out;
  }

 private:
  int& count(Vertex v, int c) { return neighbor_colors_[v * n_ + static_cast<std::size_t>(c)]; }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (count(w, c)++ == 0) ++saturation_[w];
    }
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex w : g_.neighbors(v)) {
      if (--count(w, c) == 0) --saturation_[w];
    }
  }

  // Highest saturation, then highest degree, then lowest index.
  Vertex select() const {
    Vertex best = n_;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best == n_ || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  Coloring snapshot(int used) const { return Coloring{color_, used}; }

  Coloring heuristic() {
    int used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const Vertex v = select();
      int c = 0;
      while (count(v, c) > 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    Coloring col = snapshot(used);
    for (Vertex v = 0; v < n_; ++v) unassign(v);
    return col;
  }

  void search(std::size_t colored, int used) {
    if (aborted_ || used >= upper_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      upper_ = used;
      best_ = snapshot(used);
      return;
    }
    const Vertex v = select();
    for (int c = 0; c <= used; ++c) {
      if (c == used && used + 1 >= upper_) break;
      if (count(v, c) > 0) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c + 1));
      unassign(v);
      if (aborted_ || upper_ <= lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> color_;
  std::vector<int> neighbor_colors_;
  std::vector<int> saturation_;
  Coloring best_;
  int upper_ = 0;
  int lower_ = 0;
};

}  // namespace

Coloring greedy_coloring(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("greedy_coloring: order is not a permutation");
    seen[v] = true;
  }
  if (order.size() != n) throw std::invalid_argument("greedy_coloring: order is not a permutation");

  Coloring col{std::vector<int>(n, -1), 0};
  std::vector<bool> taken;
  for (Vertex v : order) {
    taken.assign(static_cast<std::size_t>(col.colors) + 1, false);
    for (Vertex w : g.neighbors(v)) {
      if (col.assignment[w] >= 0) taken[static_cast<std::size_t>(col.assignment[w])] = true;
    }
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    col.assignment[v] = c;
    col.colors = std::max(col.colors, c + 1);
  }
  return col;
}

bool verify_coloring(const Graph& g, const Coloring& col) {
  if (col.assignment.size() != g.order()) return false;
  for (int c : col.assignment) {
    if (c < 0 || c >= col.colors) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (col.assignment[u] == col.assignment[v]) return false;
  }
  return true;
}

CliqueResult clique_number(const Graph& g, std::uint64_t node_budget) {
  return CliqueSearch(g, node_budget).run();
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget) {
  return DsaturSearch(g, node_budget).run();
}

}  // namespace spectra_chi
