#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "navembed/graph.hpp"
#include "navembed/matrix.hpp"
#include "navembed/rng.hpp"

namespace navembed {

struct EmbeddingConfig {
  std::size_t dim = 20;
  double init_half_width = 0.5;  // initial velocities ~ U[-w, w]
  double sync_tolerance = 1e-4;
  std::size_t max_iters = 100000;
  std::uint64_t seed = kDefaultSeed;

  void validate() const;
};

// Velocities X and positions P of every vertex in the metric space.
//
// One step replaces each velocity by the plain average of its neighbors'
// previous velocities (all vertices simultaneously) and adds the new
// velocity to the position. Positions therefore satisfy
// P_t = P_0 + X_1 + ... + X_t with P_0 = X_0.
struct EmbeddingState {
  RowMatrix velocity;
  RowMatrix position;
  std::size_t iteration = 0;
  std::vector<double> sync_errors;  // per-dimension velocity variance

  RowMatrix scratch;  // workspace for the next velocities
};

// X_0 ~ U[-w, w] i.i.d. from cfg.seed; P_0 = X_0.
EmbeddingState init_state(const Graph& g, const EmbeddingConfig& cfg);

// State built from explicit initial velocities.
EmbeddingState state_from_velocities(RowMatrix initial_velocity);

// Advances one step in place. Throws std::invalid_argument if some vertex has
// no neighbors, or if the state does not match the graph.
void step(const Graph& g, EmbeddingState& state);

// Population variance of each column.
std::vector<double> sync_error(const RowMatrix& velocity);

struct EmbeddingResult {
  RowMatrix positions;  // rows of vertices outside the embedded component are NaN
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> sync_errors;
  std::vector<VertexId> embedded_vertices;  // sorted
};

// Iterates until every per-dimension sync error is below the tolerance, or
// max_iters steps. A disconnected graph has only its largest component
// embedded. Not converging is reported, not thrown.
EmbeddingResult embed(const Graph& g, const EmbeddingConfig& cfg);

// Same as embed() but starting from the given velocities (connected graph).
EmbeddingResult embed_from(const Graph& g, RowMatrix initial_velocity,
                           double sync_tolerance, std::size_t max_iters);

}  // namespace navembed
