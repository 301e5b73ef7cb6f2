#include "navembed/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "navembed/generators.hpp"
#include "test_graphs.hpp"

namespace navembed {
namespace {

using testing::adjacency_matrix;
using testing::cycle_graph;
using testing::path_graph;
using testing::star_graph;

// Independent oracle: triangle enumeration on the dense adjacency matrix.
double brute_force_clustering(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  double sum = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < n; ++u) {
      if (a[v][u]) nb.push_back(u);
    }
    if (nb.size() < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) links += a[nb[i]][nb[j]];
    }
    sum += 2.0 * links / (nb.size() * (nb.size() - 1.0));
  }
  return sum / n;
}

TEST(GraphTest, RejectsSelfLoopsDuplicatesAndRange) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(3, dup), std::invalid_argument);
  const std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, range), std::invalid_argument);
  EXPECT_THROW(Graph::from_adjacency({{1}, {}}), std::invalid_argument);
}

TEST(GraphTest, AdjacencyIsSortedAndSymmetric) {
  const std::vector<Edge> edges{{3, 0}, {0, 2}, {1, 0}, {2, 3}};
  const Graph g = Graph::from_edges(4, edges);
  EXPECT_EQ(g.edge_count(), 4u);
  const auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < 4; ++v) {
    degree_sum += g.degree(v);
    for (VertexId u : g.neighbors(v)) EXPECT_TRUE(g.has_edge(u, v));
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

TEST(BfsTest, Examples) {
  EXPECT_EQ(bfs_distances(path_graph(3), 0), (std::vector<HopCount>{0, 1, 2}));
  EXPECT_EQ(bfs_distances(complete_graph(4), 2), (std::vector<HopCount>{1, 1, 0, 1}));
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  EXPECT_EQ(bfs_distances(Graph::from_edges(4, edges), 0),
            (std::vector<HopCount>{0, 1, kUnreachable, kUnreachable}));
}

TEST(BfsTest, NeighborsDifferByAtMostOneHop) {
  Rng rng(5);
  const Graph g = watts_strogatz({.n = 300, .k = 6, .p = 0.1, .seed = 5});
  for (int trial = 0; trial < 10; ++trial) {
    const auto dist = bfs_distances(g, static_cast<VertexId>(rng.uniform_index(300)));
    for (const Edge& e : g.edges()) {
      const auto gap = dist[e.u] > dist[e.v] ? dist[e.u] - dist[e.v] : dist[e.v] - dist[e.u];
      EXPECT_LE(gap, 1u);
    }
  }
}

TEST(DiameterTest, RingLatticeMatchesClosedForm) {
  // Ring lattice distance: ceil(ring offset / (k/2)); diameter ceil((n/2)/(k/2)).
  const std::size_t n = 1000;
  const std::size_t k = 10;
  const Graph g = ring_lattice(n, k);
  for (VertexId s : {0u, 17u, 999u}) {
    const auto dist = bfs_distances(g, s);
    for (VertexId t = 0; t < n; ++t) {
      const std::size_t offset = std::min<std::size_t>((t + n - s) % n, (s + n - t) % n);
      ASSERT_EQ(dist[t], (offset + k / 2 - 1) / (k / 2));
    }
  }
  EXPECT_EQ(diameter(g), 100u);
}

TEST(DiameterTest, SmallCases) {
  EXPECT_EQ(diameter(complete_graph(7)), 1u);
  EXPECT_EQ(diameter(path_graph(5)), 4u);
  EXPECT_THROW(diameter(complete_graph(1)), std::invalid_argument);
}

TEST(DiameterTest, DisconnectedUsesLargestComponent) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {4, 5}};
  EXPECT_EQ(diameter(Graph::from_edges(6, edges)), 3u);
}

TEST(DiameterTest, BoundsEverySampledDistance) {
  const Graph g = watts_strogatz({.n = 200, .k = 4, .p = 0.05, .seed = 9});
  const HopCount d = diameter(g);
  const auto members = largest_component(g);
  for (VertexId s : {members[0], members[members.size() / 2]}) {
    const auto dist = bfs_distances(g, s);
    for (VertexId t : members) EXPECT_LE(dist[t], d);
  }
}

TEST(ClusteringTest, Examples) {
  EXPECT_DOUBLE_EQ(clustering_coefficient(complete_graph(4)), 1.0);
  EXPECT_DOUBLE_EQ(clustering_coefficient(star_graph(5)), 0.0);
  // 3(k-2)/(4(k-1)) at k = 4.
  EXPECT_DOUBLE_EQ(clustering_coefficient(ring_lattice(50, 4)), 0.5);
  EXPECT_DOUBLE_EQ(brute_force_clustering(ring_lattice(50, 4)), 0.5);
}

TEST(ClusteringTest, AgreesWithTriangleEnumeration) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = watts_strogatz({.n = 120, .k = 8, .p = 0.2, .seed = seed});
    const double c = clustering_coefficient(g);
    EXPECT_NEAR(c, brute_force_clustering(g), 1e-12);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
}

TEST(ClusteringTest, IsOneOnlyForCompleteNeighborhoods) {
  // Two triangles sharing a vertex: the hub's neighborhood is not complete.
  const std::vector<Edge> bowtie{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
  EXPECT_LT(clustering_coefficient(Graph::from_edges(5, bowtie)), 1.0);
  // Two disjoint triangles: every neighborhood is complete.
  const std::vector<Edge> triangles{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  EXPECT_DOUBLE_EQ(clustering_coefficient(Graph::from_edges(6, triangles)), 1.0);
}

TEST(ComponentTest, LargestComponent) {
  EXPECT_EQ(largest_component(complete_graph(4)), (std::vector<VertexId>{0, 1, 2, 3}));
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {3, 4}};
  EXPECT_EQ(largest_component(Graph::from_edges(5, edges)), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(largest_component(Graph::from_edges(3, {})), (std::vector<VertexId>{0}));
  const std::vector<Edge> tie{{3, 4}, {0, 2}};
  EXPECT_EQ(largest_component(Graph::from_edges(5, tie)), (std::vector<VertexId>{0, 2}));
}

TEST(ComponentTest, InducedSubgraphRelabels) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {3, 4}, {2, 4}};
  const Graph g = Graph::from_edges(5, edges);
  const std::vector<VertexId> keep{1, 2, 4};
  const Subgraph sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.graph.vertex_count(), 3u);
  EXPECT_EQ(sub.graph.edge_count(), 2u);
  EXPECT_EQ(sub.original_ids, keep);
}

TEST(BipartiteTest, KnownGraphs) {
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_TRUE(is_bipartite(star_graph(4)));
  EXPECT_FALSE(is_bipartite(complete_graph(3)));
}

TEST(PathDistributionTest, Examples) {
  const std::vector<VertexPair> ring_pairs{{0, 1}, {0, 2}};
  const auto ring = shortest_path_distribution(cycle_graph(4), ring_pairs);
  EXPECT_EQ(ring.histogram, (std::map<HopCount, std::uint64_t>{{1, 1}, {2, 1}}));
  EXPECT_EQ(ring.total, 2u);

  std::vector<VertexPair> all;
  for (VertexId s = 0; s < 3; ++s) {
    for (VertexId t = 0; t < 3; ++t) {
      if (s != t) all.emplace_back(s, t);
    }
  }
  const auto k3 = shortest_path_distribution(complete_graph(3), all);
  EXPECT_EQ(k3.histogram, (std::map<HopCount, std::uint64_t>{{1, 6}}));

  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const std::vector<VertexPair> cross{{0, 2}};
  const auto split = shortest_path_distribution(Graph::from_edges(4, edges), cross);
  EXPECT_TRUE(split.histogram.empty());
  EXPECT_EQ(split.total, 0u);
  EXPECT_EQ(split.unreachable, 1u);
}

}  // namespace
}  // namespace navembed
