#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace navembed {

using VertexId = std::uint32_t;
using HopCount = std::uint32_t;

inline constexpr HopCount kUnreachable = std::numeric_limits<HopCount>::max();

struct Edge {
  VertexId u;
  VertexId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph in compressed adjacency form. Neighbor
// lists are sorted ascending. Vertex ids are dense in [0, n).
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges (in either
  // orientation) or endpoints outside [0, n).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  // Adjacency lists must already be symmetric; they are sorted here and then
  // checked.
  static Graph from_adjacency(std::vector<std::vector<VertexId>> adjacency);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  // Each edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_invariants() const;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

Graph complete_graph(std::size_t n);

// Hop distances from source; kUnreachable outside source's component.
std::vector<HopCount> bfs_distances(const Graph& g, VertexId source);

// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Vertex set of a largest component; ties go to the component containing the
// smallest vertex id.
std::vector<VertexId> largest_component(const Graph& g);

// Maximum eccentricity over the largest component, by all-pairs BFS. Logs a
// warning when the graph is disconnected. Throws if n < 2.
HopCount diameter(const Graph& g);

// Mean local clustering coefficient; vertices of degree < 2 contribute 0.
double clustering_coefficient(const Graph& g);

struct Subgraph {
  Graph graph;
  std::vector<VertexId> original_ids;  // subgraph id -> id in the parent
};

// Subgraph induced by a sorted, duplicate-free vertex list.
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

struct PathLengthDistribution {
  std::map<HopCount, std::uint64_t> histogram;  // hop count (>= 1) -> frequency
  std::uint64_t total = 0;
  std::uint64_t unreachable = 0;

  void add(HopCount length, std::uint64_t count = 1);
  void merge(const PathLengthDistribution& other);
  friend bool operator==(const PathLengthDistribution&,
                         const PathLengthDistribution&) = default;
};

using VertexPair = std::pair<VertexId, VertexId>;

// Histogram of BFS distances for the given (source, target) pairs.
// Unreachable pairs are only counted in `unreachable`.
PathLengthDistribution shortest_path_distribution(const Graph& g,
                                                  std::span<const VertexPair> pairs);

}  // namespace navembed

namespace navembed {

// Two-colorability by BFS.
bool is_bipartite(const Graph& g);

}  // namespace navembed
