#include "navembed/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "navembed/log.hpp"

namespace navembed {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> adjacency(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  return from_adjacency(std::move(adjacency));
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adjacency) {
  Graph g;
  g.offsets_.reserve(adjacency.size() + 1);
  g.offsets_.push_back(0);
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
  }
  g.check_invariants();
  return g;
}

void Graph::check_invariants() const {
  const std::size_t n = vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    auto nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n) {
        throw std::invalid_argument("neighbor id " + std::to_string(nb[i]) + " of vertex " +
                                    std::to_string(v) + " is out of range");
      }
      if (nb[i] == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nb[i] == nb[i - 1]) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(v) + ", " +
                                    std::to_string(nb[i]) + ")");
      }
      if (!has_edge(nb[i], v)) {
        throw std::invalid_argument("adjacency is not symmetric at (" + std::to_string(v) +
                                    ", " + std::to_string(nb[i]) + ")");
      }
    }
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  std::vector<std::vector<VertexId>> adjacency(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) adjacency[u].push_back(v);
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

std::vector<HopCount> bfs_distances(const Graph& g, VertexId source) {
  if (source >= g.vertex_count()) throw std::out_of_range("bfs source out of range");
  std::vector<HopCount> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> components;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> members{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (VertexId v : g.neighbors(members[head])) {
        if (!seen[v]) {
          seen[v] = 1;
          members.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](HopCount d) { return d == kUnreachable; });
}

std::vector<VertexId> largest_component(const Graph& g) {
  auto components = connected_components(g);
  if (components.empty()) return {};
  // Components are already ordered by smallest member, so the first maximum
  // wins ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < components.size(); ++i) {
    if (components[i].size() > components[best].size()) best = i;
  }
  return std::move(components[best]);
}

HopCount diameter(const Graph& g) {
  if (g.vertex_count() < 2) throw std::invalid_argument("diameter needs at least 2 vertices");
  const auto components = connected_components(g);
  std::vector<VertexId> members;
  if (components.size() > 1) {
    log_warning("diameter: graph has " + std::to_string(components.size()) +
                " components; measuring the largest");
    members = largest_component(g);
  } else {
    members = components.front();
  }
  HopCount best = 0;
  for (VertexId s : members) {
    const auto dist = bfs_distances(g, s);
    for (VertexId t : members) best = std::max(best, dist[t]);
  }
  return best;
}

double clustering_coefficient(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    const std::size_t d = nb.size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < d; ++a) {
      // Count neighbors of nb[a] that are also neighbors of v and larger
      // than nb[a], by merging two sorted lists.
      const auto other = g.neighbors(nb[a]);
      auto it = std::upper_bound(other.begin(), other.end(), nb[a]);
      std::size_t b = a + 1;
      while (it != other.end() && b < d) {
        if (*it < nb[b]) {
          ++it;
        } else if (nb[b] < *it) {
          ++b;
        } else {
          ++links;
          ++it;
          ++b;
        }
      }
    }
    sum += static_cast<double>(links) / (static_cast<double>(d) * (d - 1) / 2.0);
  }
  return sum / static_cast<double>(n);
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> local(g.vertex_count(), kUnreachable);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0 && vertices[i] <= vertices[i - 1]) {
      throw std::invalid_argument("induced_subgraph: vertex list must be sorted and unique");
    }
    local[vertices[i]] = static_cast<VertexId>(i);
  }
  std::vector<std::vector<VertexId>> adjacency(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId v : g.neighbors(vertices[i])) {
      if (local[v] != kUnreachable) adjacency[i].push_back(local[v]);
    }
  }
  return {Graph::from_adjacency(std::move(adjacency)),
          std::vector<VertexId>(vertices.begin(), vertices.end())};
}

void PathLengthDistribution::add(HopCount length, std::uint64_t count) {
  if (length == 0) throw std::invalid_argument("path lengths must be >= 1");
  histogram[length] += count;
  total += count;
}

void PathLengthDistribution::merge(const PathLengthDistribution& other) {
  for (const auto& [length, count] : other.histogram) add(length, count);
  unreachable += other.unreachable;
}

PathLengthDistribution shortest_path_distribution(const Graph& g,
                                                  std::span<const VertexPair> pairs) {
  PathLengthDistribution out;
  // Group by source so each BFS is run once.
  std::vector<VertexPair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<HopCount> dist;
  VertexId current = kUnreachable;
  for (const auto& [s, t] : sorted) {
    if (s == t) throw std::invalid_argument("shortest_path_distribution: source equals target");
    if (s != current) {
      dist = bfs_distances(g, s);
      current = s;
    }
    if (t >= g.vertex_count()) throw std::out_of_range("target out of range");
    if (dist[t] == kUnreachable) {
      ++out.unreachable;
    } else {
      out.add(dist[t]);
    }
  }
  return out;
}

}  // namespace navembed

namespace navembed {

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace navembed
