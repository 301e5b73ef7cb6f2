#include "navembed/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace navembed {
namespace {

// Fenwick tree over non-negative weights supporting proportional sampling.
class WeightTree {
 public:
  explicit WeightTree(std::size_t capacity) : tree_(capacity + 1, 0.0), weights_(capacity, 0.0) {}

  void set(std::size_t i, double w) {
    const double delta = w - weights_[i];
    weights_[i] = w;
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
    total_ += delta;
  }

  double weight(std::size_t i) const { return weights_[i]; }
  double total() const { return total_; }

  // Smallest index whose cumulative weight exceeds `target`.
  std::size_t find(double target) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= target) {
        pos += step;
        target -= tree_[pos];
      }
    }
    return std::min(pos, weights_.size() - 1);
  }

 private:
  std::vector<double> tree_;
  std::vector<double> weights_;
  double total_ = 0.0;
};

}  // namespace

void WsParams::validate() const {
  if (k % 2 != 0) throw std::invalid_argument("k must be even");
  if (k == 0 || k >= n) throw std::invalid_argument("k must satisfy 0 < k < n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

void BaParams::validate() const {
  if (m_links < 1) throw std::invalid_argument("mlinks must be >= 1");
  if (n <= m_links) throw std::invalid_argument("n must exceed mlinks");
  if (!(k0 > -static_cast<double>(m_links))) {
    throw std::invalid_argument("k0 must satisfy k0 > -mlinks (got k0 = " + std::to_string(k0) +
                                ", mlinks = " + std::to_string(m_links) + ")");
  }
}

Graph ring_lattice(std::size_t n, std::size_t k) {
  if (k % 2 != 0) throw std::invalid_argument("k must be even");
  if (k >= n) throw std::invalid_argument("k must be smaller than n");
  std::vector<std::vector<VertexId>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= k / 2; ++j) {
      const auto v = static_cast<VertexId>((i + j) % n);
      adjacency[i].push_back(v);
      adjacency[v].push_back(static_cast<VertexId>(i));
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

Graph watts_strogatz(const WsParams& params) {
  params.validate();
  const std::size_t n = params.n;
  const std::size_t half = params.k / 2;
  std::vector<std::vector<VertexId>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= half; ++j) {
      const auto v = static_cast<VertexId>((i + j) % n);
      adjacency[i].push_back(v);
      adjacency[v].push_back(static_cast<VertexId>(i));
    }
  }
  auto contains = [&](VertexId a, VertexId b) {
    const auto& list = adjacency[a];
    return std::find(list.begin(), list.end(), b) != list.end();
  };
  auto erase = [&](VertexId a, VertexId b) {
    auto& list = adjacency[a];
    list.erase(std::find(list.begin(), list.end(), b));
  };

  Rng rng(params.seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = static_cast<VertexId>(i);
    for (std::size_t j = 1; j <= half; ++j) {
      if (!rng.bernoulli(params.p)) continue;
      // Saturated vertex: no legal new endpoint exists.
      if (adjacency[u].size() >= n - 1) continue;
      const auto old_far = static_cast<VertexId>((i + j) % n);
      VertexId w;
      do {
        w = static_cast<VertexId>(rng.uniform_index(n));
      } while (w == u || contains(u, w));
      erase(u, old_far);
      erase(old_far, u);
      adjacency[u].push_back(w);
      adjacency[w].push_back(u);
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

Graph generalized_ba(const BaParams& params) {
  params.validate();
  const std::size_t n = params.n;
  const std::size_t m = params.m_links;
  std::vector<std::vector<VertexId>> adjacency(n);
  for (VertexId u = 0; u <= m; ++u) {
    for (VertexId v = 0; v <= m; ++v) {
      if (u != v) adjacency[u].push_back(v);
    }
  }

  WeightTree weights(n);
  for (std::size_t v = 0; v <= m; ++v) weights.set(v, static_cast<double>(m) + params.k0);

  Rng rng(params.seed);
  std::vector<VertexId> targets;
  targets.reserve(m);
  for (std::size_t v = m + 1; v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const std::size_t pick = weights.find(rng.uniform01() * weights.total());
      // Rounding residue in the tree can land on an already removed entry.
      if (weights.weight(pick) <= 0.0 || pick >= v) continue;
      targets.push_back(static_cast<VertexId>(pick));
      weights.set(pick, 0.0);
    }
    for (VertexId t : targets) {
      adjacency[t].push_back(static_cast<VertexId>(v));
      adjacency[v].push_back(t);
      weights.set(t, static_cast<double>(adjacency[t].size()) + params.k0);
    }
    weights.set(v, static_cast<double>(m) + params.k0);
  }
  return Graph::from_adjacency(std::move(adjacency));
}

double gamma_to_k0(double gamma, std::size_t m_links) {
  if (!(gamma > 2.0)) {
    throw std::invalid_argument("gamma must be > 2 so that k0 > -mlinks (got gamma = " +
                                std::to_string(gamma) + ")");
  }
  return (gamma - 3.0) * static_cast<double>(m_links);
}

double k0_to_gamma(double k0, std::size_t m_links) {
  return 3.0 + k0 / static_cast<double>(m_links);
}

}  // namespace navembed
