#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "navembed/graph.hpp"
#include "navembed/matrix.hpp"
#include "navembed/rng.hpp"

namespace navembed {

inline constexpr std::size_t kMaxOracleVertices = 200;

// Eigendecomposition of the normal matrix N = K^-1 Adj (K = degree diagonal),
// obtained from the symmetric similar matrix S = K^-1/2 Adj K^-1/2.
//
// If S u = lambda u then v = K^-1/2 u satisfies N v = lambda v, and the
// columns of V are K-orthonormal: V' K V = I. The last column is the
// lambda = 1 mode, constant across vertices for a connected graph.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;          // ascending
  Eigen::MatrixXd eigenvectors;         // V, columns v_k
  Eigen::MatrixXd symmetric_eigenvectors;  // U, orthonormal
  Eigen::VectorXd degrees;

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues.size()); }
  // Index of the lambda = 1 (drift) mode.
  std::size_t drift_index() const { return size() - 1; }
  bool has_bipartite_mode() const;  // some |lambda + 1| < 1e-8
};

// Throws std::invalid_argument on a disconnected graph, an isolated vertex,
// or more than kMaxOracleVertices vertices.
SpectralDecomposition decompose(const Graph& g);

// Coefficients A with V A = X0, i.e. A = U' K^1/2 X0. Throws
// std::runtime_error when the reconstruction error exceeds 1e-6.
Eigen::MatrixXd expansion_coefficients(const SpectralDecomposition& dec,
                                       const RowMatrix& initial_velocity);

// Limit positions sum_{k not drift} v_k a_k / (1 - lambda_k). The drift mode
// only translates every vertex by the same amount, so it is left out: the
// result is defined up to a per-dimension translation. Throws
// std::domain_error on a bipartite spectrum.
RowMatrix closed_form_positions(const SpectralDecomposition& dec,
                                const RowMatrix& initial_velocity);

// Squared limit distance between i and j from the expansion coefficients.
double exact_distance(const SpectralDecomposition& dec, const Eigen::MatrixXd& coefficients,
                      VertexId i, VertexId j);

// Large-dimension expectation of the squared limit distance when the
// initial velocities are i.i.d. with second moment x_variance:
//   sum_k dim * x_variance / (1 - lambda_k)^2 * (w_ik - w_jk)^2
// with w_k = v_k / |v_k| (unit Euclidean norm eigenvectors).
double expected_distance(const SpectralDecomposition& dec, std::size_t dim, double x_variance,
                         VertexId i, VertexId j);

// Exact mean of exact_distance over i.i.d. initial velocities with second
// moment x_variance, without assuming uncorrelated coefficients.
double mean_exact_distance(const SpectralDecomposition& dec, std::size_t dim,
                           double x_variance, VertexId i, VertexId j);

// Laplacian and degree quadratic forms v'Lv and v'Kv, evaluated on the graph
// (independently of the eigensolver).
struct QuadraticForms {
  double laplacian = 0.0;
  double degree = 0.0;
};
QuadraticForms quadratic_forms(const Graph& g, std::span<const double> x);

struct EnergyReport {
  // max_k |v'Lv - (1 - lambda) v'Kv| / max(|(1 - lambda) v'Kv|, v'Kv)
  double max_relation_residual = 0.0;
  double second_largest_eigenvalue = 0.0;
  double energy_bound = 0.0;  // 1 - second largest eigenvalue
  double min_probe_energy = 0.0;
  std::size_t probes = 0;
  bool relation_holds = false;  // residual < 1e-10
  bool probes_hold = false;     // every probe >= bound - 1e-9
};

// Checks v'Lv = (1 - lambda) v'Kv for every eigenpair, and that random
// K-normalized probes K-orthogonal to the constant vector never have energy
// below 1 - lambda_{n-1}.
EnergyReport energy_relation_check(const SpectralDecomposition& dec, const Graph& g, Rng& rng,
                                   std::size_t probes = 100);

// Pairwise Euclidean distances between rows.
Eigen::MatrixXd distance_matrix(const RowMatrix& positions);

// max over i < j of |a_ij - b_ij| / b_ij (absolute difference where b_ij = 0).
double max_relative_discrepancy(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace navembed
