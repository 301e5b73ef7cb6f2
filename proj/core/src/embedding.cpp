#include "navembed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "navembed/log.hpp"

namespace navembed {
namespace {

bool synchronized(const std::vector<double>& errors, double tolerance) {
  return std::all_of(errors.begin(), errors.end(), [&](double e) { return e < tolerance; });
}

EmbeddingResult iterate(const Graph& g, EmbeddingState state, double tolerance,
                        std::size_t max_iters) {
  while (!synchronized(state.sync_errors, tolerance) && state.iteration < max_iters) {
    step(g, state);
  }
  EmbeddingResult result;
  result.iterations = state.iteration;
  result.converged = synchronized(state.sync_errors, tolerance);
  result.sync_errors = std::move(state.sync_errors);
  result.positions = std::move(state.position);
  return result;
}

}  // namespace

void EmbeddingConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (!(init_half_width > 0.0)) throw std::invalid_argument("init_half_width must be > 0");
  if (!(sync_tolerance > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

EmbeddingState init_state(const Graph& g, const EmbeddingConfig& cfg) {
  cfg.validate();
  RowMatrix x(g.vertex_count(), cfg.dim);
  Rng rng(cfg.seed);
  for (double& value : x.data()) value = rng.uniform(-cfg.init_half_width, cfg.init_half_width);
  return state_from_velocities(std::move(x));
}

EmbeddingState state_from_velocities(RowMatrix initial_velocity) {
  EmbeddingState s;
  s.sync_errors = sync_error(initial_velocity);
  s.position = initial_velocity;
  s.scratch = RowMatrix(initial_velocity.rows(), initial_velocity.cols());
  s.velocity = std::move(initial_velocity);
  return s;
}

void step(const Graph& g, EmbeddingState& state) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = state.velocity.cols();
  if (state.velocity.rows() != n || state.position.rows() != n || state.position.cols() != m) {
    throw std::invalid_argument("embedding state does not match the graph");
  }
  if (state.scratch.rows() != n || state.scratch.cols() != m) state.scratch = RowMatrix(n, m);

  const RowMatrix& old_x = state.velocity;
  RowMatrix& new_x = state.scratch;
  for (VertexId i = 0; i < n; ++i) {
    const auto nb = g.neighbors(i);
    if (nb.empty()) {
      throw std::invalid_argument("vertex " + std::to_string(i) +
                                  " has no neighbors; averaging is undefined");
    }
    auto out = new_x.row(i);
    std::fill(out.begin(), out.end(), 0.0);
    for (VertexId j : nb) {
      const auto in = old_x.row(j);
      for (std::size_t k = 0; k < m; ++k) out[k] += in[k];
    }
    const double inv_degree = 1.0 / static_cast<double>(nb.size());
    for (std::size_t k = 0; k < m; ++k) out[k] *= inv_degree;
  }

  auto p = state.position.data();
  auto x = new_x.data();
  for (std::size_t idx = 0; idx < p.size(); ++idx) p[idx] += x[idx];

  state.velocity.swap(state.scratch);
  ++state.iteration;
  state.sync_errors = sync_error(state.velocity);
}

std::vector<double> sync_error(const RowMatrix& velocity) {
  const std::size_t n = velocity.rows();
  const std::size_t m = velocity.cols();
  if (n == 0) throw std::invalid_argument("sync_error needs at least one vertex");
  // Two-pass variance of the values shifted by row 0, so equal rows give exactly 0.
  const auto origin = velocity.row(0);
  std::vector<double> mean(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = velocity.row(i);
    for (std::size_t k = 0; k < m; ++k) mean[k] += r[k] - origin[k];
  }
  for (double& v : mean) v /= static_cast<double>(n);
  std::vector<double> error(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = velocity.row(i);
    for (std::size_t k = 0; k < m; ++k) {
      const double d = (r[k] - origin[k]) - mean[k];
      error[k] += d * d;
    }
  }
  for (double& v : error) v /= static_cast<double>(n);
  return error;
}

EmbeddingResult embed(const Graph& g, const EmbeddingConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot embed an empty graph");
  auto components = connected_components(g);
  if (components.size() == 1) {
    EmbeddingResult result = iterate(g, init_state(g, cfg), cfg.sync_tolerance, cfg.max_iters);
    result.embedded_vertices = std::move(components.front());
    return result;
  }

  std::vector<VertexId> kept = largest_component(g);
  log_warning("embed: graph has " + std::to_string(components.size()) +
              " components; embedding only the largest (" + std::to_string(kept.size()) +
              " of " + std::to_string(n) + " vertices)");
  if (kept.size() < 2) throw std::invalid_argument("embed: no component has an edge");
  const Subgraph sub = induced_subgraph(g, kept);
  EmbeddingResult inner =
      iterate(sub.graph, init_state(sub.graph, cfg), cfg.sync_tolerance, cfg.max_iters);

  EmbeddingResult result;
  result.positions = RowMatrix(n, cfg.dim, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t local = 0; local < kept.size(); ++local) {
    const auto src = inner.positions.row(local);
    std::copy(src.begin(), src.end(), result.positions.row(kept[local]).begin());
  }
  result.iterations = inner.iterations;
  result.converged = inner.converged;
  result.sync_errors = std::move(inner.sync_errors);
  result.embedded_vertices = std::move(kept);
  return result;
}

EmbeddingResult embed_from(const Graph& g, RowMatrix initial_velocity, double sync_tolerance,
                           std::size_t max_iters) {
  if (initial_velocity.rows() != g.vertex_count()) {
    throw std::invalid_argument("initial velocities do not match the graph");
  }
  EmbeddingResult result =
      iterate(g, state_from_velocities(std::move(initial_velocity)), sync_tolerance, max_iters);
  result.embedded_vertices.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) result.embedded_vertices[v] = v;
  return result;
}

}  // namespace navembed
