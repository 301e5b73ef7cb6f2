#include "navembed/embedding.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "navembed/generators.hpp"
#include "navembed/spectral.hpp"
#include "test_graphs.hpp"

namespace navembed {
namespace {

RowMatrix column(std::initializer_list<double> values) {
  RowMatrix x(values.size(), 1);
  std::size_t i = 0;
  for (double v : values) x(i++, 0) = v;
  return x;
}

RowMatrix random_velocities(std::size_t n, std::size_t dim, Rng& rng) {
  RowMatrix x(n, dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < dim; ++k) x(i, k) = rng.uniform(-0.5, 0.5);
  }
  return x;
}

TEST(EmbeddingConfigTest, Validation) {
  EXPECT_NO_THROW(EmbeddingConfig{}.validate());
  EXPECT_THROW((EmbeddingConfig{.dim = 0}).validate(), std::invalid_argument);
  EXPECT_THROW((EmbeddingConfig{.init_half_width = 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((EmbeddingConfig{.sync_tolerance = 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((EmbeddingConfig{.max_iters = 0}).validate(), std::invalid_argument);
}

TEST(InitStateTest, RangeShapeAndDeterminism) {
  const Graph g = ring_lattice(2000, 4);
  const EmbeddingConfig cfg{.dim = 5, .seed = 99};
  const EmbeddingState s = init_state(g, cfg);
  ASSERT_EQ(s.velocity.rows(), 2000u);
  ASSERT_EQ(s.velocity.cols(), 5u);
  EXPECT_EQ(s.position, s.velocity);
  EXPECT_EQ(s.iteration, 0u);
  double sum = 0.0;
  for (std::size_t i = 0; i < 2000; ++i) {
    for (std::size_t k = 0; k < 5; ++k) {
      ASSERT_GE(s.velocity(i, k), -0.5);
      ASSERT_LE(s.velocity(i, k), 0.5);
      sum += s.velocity(i, k);
    }
  }
  // 10^4 samples of U[-0.5, 0.5]: sd of the mean is 0.5 / sqrt(3 * 10^4).
  EXPECT_LT(std::abs(sum / 1e4), 3.0 * 0.5 / std::sqrt(3e4));
  EXPECT_EQ(init_state(g, cfg).velocity, s.velocity);
}

TEST(StepTest, TwoVerticesSwap) {
  EmbeddingState s = state_from_velocities(column({0.375, -0.125}));
  step(complete_graph(2), s);
  EXPECT_EQ(s.velocity, column({-0.125, 0.375}));
  EXPECT_EQ(s.position, column({0.25, 0.25}));
  EXPECT_EQ(s.iteration, 1u);
}

TEST(StepTest, TriangleErrorShrinksByFour) {
  Rng rng(1);
  EmbeddingState s = state_from_velocities(random_velocities(3, 4, rng));
  const Graph g = complete_graph(3);
  auto previous = sync_error(s.velocity);
  for (int t = 0; t < 8; ++t) {
    step(g, s);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_NEAR(s.sync_errors[k], previous[k] / 4.0, 1e-15 + 1e-12 * previous[k]);
    }
    previous = s.sync_errors;
  }
}

TEST(StepTest, RejectsIsolatedVertex) {
  EmbeddingState s = state_from_velocities(column({0.1, 0.2, 0.3}));
  const std::vector<Edge> edges{{0, 1}};
  EXPECT_THROW(step(Graph::from_edges(3, edges), s), std::invalid_argument);
}

TEST(StepTest, ConservationContractionAndPositionLedger) {
  Rng rng(7);
  const Graph g = watts_strogatz({.n = 300, .k = 6, .p = 0.1, .seed = 7});
  EmbeddingState s = state_from_velocities(random_velocities(300, 3, rng));
  const auto weighted = [&](const RowMatrix& x, std::size_t k) {
    double total = 0.0;
    for (VertexId i = 0; i < g.vertex_count(); ++i) total += g.degree(i) * x(i, k);
    return total;
  };
  std::vector<double> initial(3);
  for (std::size_t k = 0; k < 3; ++k) initial[k] = weighted(s.velocity, k);
  RowMatrix ledger = s.position;
  for (int t = 0; t < 200; ++t) {
    const RowMatrix before = s.velocity;
    step(g, s);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_NEAR(weighted(s.velocity, k), initial[k], 1e-10 * std::max(1.0, std::abs(initial[k])));
      double old_min = before(0, k), old_max = before(0, k), new_min = s.velocity(0, k),
             new_max = s.velocity(0, k);
      for (std::size_t i = 1; i < 300; ++i) {
        old_min = std::min(old_min, before(i, k));
        old_max = std::max(old_max, before(i, k));
        new_min = std::min(new_min, s.velocity(i, k));
        new_max = std::max(new_max, s.velocity(i, k));
      }
      ASSERT_GE(new_min, old_min);
      ASSERT_LE(new_max, old_max);
    }
    for (std::size_t i = 0; i < 300; ++i) {
      for (std::size_t k = 0; k < 3; ++k) ledger(i, k) += s.velocity(i, k);
    }
    ASSERT_EQ(ledger, s.position);
  }
}

TEST(SyncErrorTest, Examples) {
  EXPECT_EQ(sync_error(column({0.7, 0.7, 0.7})), std::vector<double>{0.0});
  EXPECT_DOUBLE_EQ(sync_error(column({0.0, 1.0}))[0], 0.25);
  EXPECT_DOUBLE_EQ(sync_error(column({-1.0, -1.0, 1.0, 1.0}))[0], 1.0);
}

TEST(EmbedTest, TriangleConvergesInPredictedSteps) {
  Rng rng(3);
  const RowMatrix x0 = random_velocities(3, 2, rng);
  const auto e0 = sync_error(x0);
  const double worst = std::max(e0[0], e0[1]);
  std::size_t expected = 0;
  while (worst / std::pow(4.0, static_cast<double>(expected)) >= 1e-4) ++expected;
  const EmbeddingResult r = embed_from(complete_graph(3), x0, 1e-4, 1000);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, expected);
}

TEST(EmbedTest, TwoVerticesNeverConverge) {
  const EmbeddingResult r = embed_from(complete_graph(2), column({0.4, -0.4}), 1e-4, 500);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 500u);
}

TEST(EmbedTest, SmallWorldConvergesWithFinitePositions) {
  const Graph g = watts_strogatz({.n = 1000, .k = 10, .p = 0.01, .seed = 5});
  const EmbeddingResult r = embed(g, {.dim = 20, .seed = 5});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.embedded_vertices.size(), 1000u);
  for (std::size_t i = 0; i < 1000; ++i) {
    for (std::size_t k = 0; k < 20; ++k) ASSERT_TRUE(std::isfinite(r.positions(i, k)));
  }
  EXPECT_LT(*std::max_element(r.sync_errors.begin(), r.sync_errors.end()), 1e-4);
}

TEST(EmbedTest, Deterministic) {
  const Graph g = watts_strogatz({.n = 200, .k = 4, .p = 0.1, .seed = 2});
  const EmbeddingConfig cfg{.dim = 5, .seed = 8};
  EXPECT_EQ(embed(g, cfg).positions, embed(g, cfg).positions);
}

TEST(EmbedTest, DisconnectedEmbedsLargestComponent) {
  // Triangle plus a separate edge.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}};
  const EmbeddingResult r = embed(Graph::from_edges(5, edges), {.dim = 2, .seed = 1});
  EXPECT_EQ(r.embedded_vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(r.converged);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_TRUE(std::isnan(r.positions(3, k)));
    EXPECT_TRUE(std::isnan(r.positions(4, k)));
    EXPECT_TRUE(std::isfinite(r.positions(0, k)));
  }
}

TEST(EmbedTest, DistancesMatchClosedFormOnSmallGraphs) {
  Rng rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 10 + 8 * static_cast<std::size_t>(trial);
    const Graph g = testing::random_connected_graph(n, 0.25, rng);
    const RowMatrix x0 = random_velocities(n, 5, rng);
    const EmbeddingResult r = embed_from(g, x0, 1e-8, 10000000);
    ASSERT_TRUE(r.converged);
    const SpectralDecomposition dec = decompose(g);
    const double err = max_relative_discrepancy(distance_matrix(r.positions),
                                                distance_matrix(closed_form_positions(dec, x0)));
    EXPECT_LT(err, 1e-3) << "n=" << n;
  }
}

}  // namespace
}  // namespace navembed
