#pragma once

#include <cstddef>
#include <cstdint>

#include "navembed/graph.hpp"
#include "navembed/rng.hpp"

namespace navembed {

// Watts-Strogatz rewired ring lattice.
struct WsParams {
  std::size_t n = 1000;
  std::size_t k = 10;  // even; each vertex links to its k nearest lattice neighbors
  double p = 0.0;      // per-edge rewiring probability
  std::uint64_t seed = kDefaultSeed;

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

// Preferential attachment with probability proportional to degree + k0.
struct BaParams {
  std::size_t n = 1000;
  std::size_t m_links = 3;  // edges brought by each new vertex
  double k0 = 0.0;          // attachment offset, must exceed -m_links
  std::uint64_t seed = kDefaultSeed;

  void validate() const;
};

// Vertex i adjacent to i +- 1 .. i +- k/2 (mod n).
Graph ring_lattice(std::size_t n, std::size_t k);

// Lattice edges are visited by source vertex ascending, then offset 1..k/2.
// With probability p the far endpoint is moved to a uniformly random vertex;
// self-loops and duplicates are resampled, so the edge count stays n*k/2.
Graph watts_strogatz(const WsParams& params);

// Seeded by a complete graph on m_links + 1 vertices. Each later vertex picks
// m_links distinct targets, renormalizing the weights after every pick.
Graph generalized_ba(const BaParams& params);

// Degree-distribution exponent of the generalized model is 3 + k0/m_links.
double gamma_to_k0(double gamma, std::size_t m_links);
double k0_to_gamma(double k0, std::size_t m_links);

}  // namespace navembed
