#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "navembed/graph.hpp"
#include "navembed/matrix.hpp"
#include "navembed/rng.hpp"

namespace navembed {

enum class Termination { kReachedTarget, kAllNeighborsVisited };

std::string_view to_string(Termination reason);

struct RouteResult {
  VertexId source = 0;
  VertexId target = 0;
  bool success = false;
  std::vector<VertexId> hops;  // starts at source
  HopCount shortest_length = kUnreachable;
  Termination reason = Termination::kAllNeighborsVisited;

  HopCount path_length() const { return static_cast<HopCount>(hops.size() - 1); }
};

// Forwards the message from the current vertex to the unvisited neighbor
// nearest (Euclidean) to coords[target]; exact ties are broken uniformly at
// random. The message carries its own path as the visited set and fails when
// every neighbor of the current vertex is on it.
RouteResult greedy_route(const Graph& g, const RowMatrix& coords, VertexId source,
                         VertexId target, Rng& rng);

// Vertices whose coordinates are all finite (the embedded component).
std::vector<VertexId> routable_vertices(const RowMatrix& coords);

// n_trials ordered (source, target) pairs drawn uniformly from the routable
// vertices with source != target. Trial t draws its pair and its tie-breaks
// from stream.derive(t), so the outcome does not depend on evaluation order.
std::vector<RouteResult> run_trials(const Graph& g, const RowMatrix& coords,
                                    std::size_t n_trials, const RngStream& stream);

// Fraction of successful trials. Throws on empty input.
double success_rate(std::span<const RouteResult> results);

// Mean path_length / shortest_length over successful trials; empty when
// there are none.
std::optional<double> stretch(std::span<const RouteResult> results);

}  // namespace navembed
