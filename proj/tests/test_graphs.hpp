#pragma once

#include <vector>

#include "navembed/generators.hpp"
#include "navembed/graph.hpp"
#include "navembed/rng.hpp"

namespace navembed::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

// G(n, p) redrawn until connected and not bipartite.
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  for (;;) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (rng.bernoulli(p)) edges.push_back({u, v});
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g) && !is_bipartite(g)) return g;
  }
}

// Dense adjacency matrix, for brute-force oracles.
inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

}  // namespace navembed::testing
