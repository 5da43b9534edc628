#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "spectra_chi/generators.hpp"
#include "spectra_chi/graph.hpp"

namespace spectra_chi {
namespace {

bool is_simple(const Graph& g) {
  std::size_t ones = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
      ones += g.adjacent(u, v) ? 1 : 0;
    }
  }
  return ones == 2 * g.edge_count();
}

bool is_regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  std::size_t count = 0;
  for (Vertex w = 0; w < g.order(); ++w) count += (g.adjacent(u, w) && g.adjacent(v, w)) ? 1 : 0;
  return count;
}

// Shortest cycle length by BFS from every vertex.
std::size_t girth(const Graph& g) {
  std::size_t best = SIZE_MAX;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<std::size_t> dist(g.order(), SIZE_MAX);
    std::vector<Vertex> parent(g.order(), SIZE_MAX);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

TEST(FromEdges, SingleEdge) {
  const Graph g = Graph::from_edges(2, {{0, 1}});
  EXPECT_EQ(g.order(), 2U);
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(FromEdges, EdgelessAndCycle) {
  EXPECT_EQ(Graph::from_edges(3, {}).edge_count(), 0U);
  const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_TRUE(is_regular(c5, 2));
  EXPECT_EQ(c5, cycle(5));
}

TEST(FromEdges, DuplicatesCollapse) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(FromEdges, RejectsBadEndpoints) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(2, {{1, 1}}), std::invalid_argument);
}

TEST(Kneser, Petersen) {
  const Graph g = kneser(5, 2);
  EXPECT_EQ(g.order(), 10U);
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_EQ(girth(g), 5U);
}

TEST(Kneser, DisjointnessMatchesBruteForce) {
  // Independent enumeration with std::set subsets in lexicographic order.
  for (int p = 4; p <= 7; ++p) {
    std::vector<std::set<int>> subsets;
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) subsets.push_back({a, b});
    }
    const Graph g = kneser(p, 2);
    ASSERT_EQ(g.order(), subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (std::size_t j = 0; j < subsets.size(); ++j) {
        std::vector<int> both;
        std::set_intersection(subsets[i].begin(), subsets[i].end(), subsets[j].begin(),
                              subsets[j].end(), std::back_inserter(both));
        EXPECT_EQ(g.adjacent(i, j), i != j && both.empty()) << p << ' ' << i << ' ' << j;
      }
    }
  }
}

TEST(Kneser, SmallCases) {
  const Graph k42 = kneser(4, 2);
  EXPECT_EQ(k42.order(), 6U);
  EXPECT_TRUE(is_regular(k42, 1));
  const Graph k62 = kneser(6, 2);
  EXPECT_EQ(k62.order(), 15U);
  EXPECT_TRUE(is_regular(k62, 6));
  EXPECT_EQ(kneser(6, 3).order(), 20U);
  EXPECT_THROW(kneser(3, 2), std::invalid_argument);
  EXPECT_THROW(kneser(2, 0), std::invalid_argument);
}

TEST(Kneser, PairFamilyOrderAndDegree) {
  for (int p = 4; p <= 12; ++p) {
    const Graph g = kneser(p, 2);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(p * (p - 1) / 2));
    EXPECT_TRUE(is_regular(g, static_cast<std::size_t>((p - 2) * (p - 3) / 2))) << p;
  }
}

TEST(Families, StandardConstructions) {
  EXPECT_EQ(complete(4).edge_count(), 6U);
  const Graph k2222 = complete_multipartite({2, 2, 2, 2});
  EXPECT_EQ(k2222.order(), 8U);
  EXPECT_TRUE(is_regular(k2222, 6));
  const Graph b3 = barbell(3);
  EXPECT_EQ(b3.order(), 6U);
  EXPECT_EQ(b3.edge_count(), 7U);
  EXPECT_TRUE(b3.adjacent(2, 3));
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(barbell(2), std::invalid_argument);
  EXPECT_THROW(complete_multipartite({2, 0}), std::invalid_argument);
  EXPECT_THROW(complete(0), std::invalid_argument);
}

TEST(Clebsch, StronglyRegular) {
  const Graph g = clebsch();
  EXPECT_EQ(g.order(), 16U);
  EXPECT_TRUE(is_regular(g, 5));
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = u + 1; v < 16; ++v) {
      EXPECT_EQ(common_neighbors(g, u, v), g.adjacent(u, v) ? 0U : 2U);
    }
  }
}

TEST(HoffmanSingleton, StronglyRegularGirthFive) {
  const Graph g = hoffman_singleton();
  EXPECT_EQ(g.order(), 50U);
  EXPECT_TRUE(is_regular(g, 7));
  EXPECT_EQ(girth(g), 5U);
  for (Vertex u = 0; u < 50; ++u) {
    for (Vertex v = u + 1; v < 50; ++v) {
      EXPECT_EQ(common_neighbors(g, u, v), g.adjacent(u, v) ? 0U : 1U);
    }
  }
}

TEST(Orthogonality, FourIsSixRegularWithTwoComponents) {
  const Graph g = orthogonality_graph(4);
  EXPECT_EQ(g.order(), 16U);
  EXPECT_TRUE(is_regular(g, 6));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].size(), 8U);
  EXPECT_EQ(comps[1].size(), 8U);
}

TEST(Orthogonality, AdjacencyIsZeroDotProduct) {
  const Graph g = orthogonality_graph(6, {.max_vertices = 4096, .notice = [](std::string_view) {}});
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto zu = orthogonality_vector(6, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto zv = orthogonality_vector(6, v);
      int dot = 0;
      for (int i = 0; i < 6; ++i) dot += zu[i] * zv[i];
      EXPECT_EQ(g.adjacent(u, v), dot == 0);
    }
  }
}

TEST(Orthogonality, TwoIsFourCycle) {
  const Graph g = orthogonality_graph(2, {.max_vertices = 4096, .notice = [](std::string_view) {}});
  EXPECT_EQ(g.order(), 4U);
  EXPECT_TRUE(is_regular(g, 2));
  EXPECT_EQ(connected_components(g).size(), 1U);
}

TEST(Orthogonality, AntipodesShareNeighborhoods) {
  for (int n : {4, 8}) {
    const Graph g = orthogonality_graph(n);
    const Vertex mask = g.order() - 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      const Vertex antipode = v ^ mask;
      EXPECT_FALSE(g.adjacent(v, antipode));
      EXPECT_EQ(g.neighbors(v), g.neighbors(antipode));
    }
  }
}

TEST(Orthogonality, NoticeOnlyWhenNotDivisibleByFour) {
  int notices = 0;
  OrthogonalityOptions opts;
  opts.notice = [&](std::string_view) { ++notices; };
  orthogonality_graph(4, opts);
  EXPECT_EQ(notices, 0);
  orthogonality_graph(6, opts);
  EXPECT_EQ(notices, 1);
}

TEST(Orthogonality, RejectsOddAndOversized) {
  EXPECT_THROW(orthogonality_graph(5), std::invalid_argument);
  EXPECT_THROW(orthogonality_graph(14), std::invalid_argument);
  OrthogonalityOptions small;
  small.max_vertices = 100;
  EXPECT_THROW(orthogonality_graph(8, small), std::invalid_argument);
}

TEST(Generators, AllSimple) {
  std::vector<Graph> all{kneser(7, 2), kneser(7, 3), cycle(9), complete(7),
                         complete_multipartite({1, 3, 2}), barbell(6), clebsch(), hoffman_singleton(),
                         orthogonality_graph(8)};
  for (const auto& g : all) EXPECT_TRUE(is_simple(g)) << g.name();
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(complete(4)), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  EXPECT_EQ(connected_components(Graph::from_edges(3, {})),
            (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  const Graph g = Graph::from_edges(5, {{4, 1}, {0, 2}});
  EXPECT_EQ(connected_components(g), (std::vector<std::vector<Vertex>>{{0, 2}, {1, 4}, {3}}));
  EXPECT_FALSE(is_connected(g));
}

TEST(Graph, InducedSubgraph) {
  const Graph g = cycle(6).induced({0, 1, 2, 4});
  EXPECT_EQ(g.order(), 4U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

}  // namespace
}  // namespace spectra_chi
