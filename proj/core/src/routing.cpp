#include "navembed/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace navembed {

std::string_view to_string(Termination reason) {
  switch (reason) {
    case Termination::kReachedTarget:
      return "reached_target";
    case Termination::kAllNeighborsVisited:
      return "all_neighbors_visited";
  }
  return "unknown";
}

RouteResult greedy_route(const Graph& g, const RowMatrix& coords, VertexId source,
                         VertexId target, Rng& rng) {
  const std::size_t n = g.vertex_count();
  if (source >= n || target >= n) throw std::invalid_argument("route endpoint out of range");
  if (source == target) throw std::invalid_argument("route source equals target");
  if (coords.rows() != n) throw std::invalid_argument("coordinates do not match the graph");

  RouteResult result;
  result.source = source;
  result.target = target;
  result.shortest_length = bfs_distances(g, source)[target];
  result.hops.push_back(source);

  std::vector<char> visited(n, 0);
  visited[source] = 1;
  const auto goal = coords.row(target);
  std::vector<VertexId> best;
  VertexId current = source;
  while (current != target) {
    best.clear();
    double best_distance = std::numeric_limits<double>::infinity();
    for (VertexId v : g.neighbors(current)) {
      if (visited[v]) continue;
      const double d = squared_distance(coords.row(v), goal);
      if (d < best_distance) {
        best_distance = d;
        best.assign(1, v);
      } else if (d == best_distance) {
        best.push_back(v);
      }
    }
    if (best.empty()) {
      result.reason = Termination::kAllNeighborsVisited;
      return result;
    }
    current = best.size() == 1 ? best.front() : best[rng.uniform_index(best.size())];
    visited[current] = 1;
    result.hops.push_back(current);
  }
  result.success = true;
  result.reason = Termination::kReachedTarget;
  return result;
}

std::vector<VertexId> routable_vertices(const RowMatrix& coords) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < coords.rows(); ++v) {
    const auto r = coords.row(v);
    if (std::all_of(r.begin(), r.end(), [](double x) { return std::isfinite(x); })) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<RouteResult> run_trials(const Graph& g, const RowMatrix& coords,
                                    std::size_t n_trials, const RngStream& stream) {
  std::vector<RouteResult> results;
  if (n_trials == 0) return results;
  const std::vector<VertexId> pool = routable_vertices(coords);
  if (pool.size() < 2) throw std::invalid_argument("routing needs at least two embedded vertices");
  results.reserve(n_trials);
  for (std::size_t t = 0; t < n_trials; ++t) {
    Rng rng = stream.derive(t).engine();
    const VertexId source = pool[rng.uniform_index(pool.size())];
    VertexId target;
    do {
      target = pool[rng.uniform_index(pool.size())];
    } while (target == source);
    results.push_back(greedy_route(g, coords, source, target, rng));
  }
  return results;
}

double success_rate(std::span<const RouteResult> results) {
  if (results.empty()) throw std::invalid_argument("success_rate of no trials");
  const auto hits = std::count_if(results.begin(), results.end(),
                                  [](const RouteResult& r) { return r.success; });
  return static_cast<double>(hits) / static_cast<double>(results.size());
}

std::optional<double> stretch(std::span<const RouteResult> results) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const RouteResult& r : results) {
    if (!r.success) continue;
    sum += static_cast<double>(r.path_length()) / static_cast<double>(r.shortest_length);
    ++count;
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

}  // namespace navembed
