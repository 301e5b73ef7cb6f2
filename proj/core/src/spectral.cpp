#include "navembed/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace navembed {
namespace {

constexpr double kBipartiteTolerance = 1e-8;
constexpr double kReconstructionTolerance = 1e-6;

void require_non_bipartite(const SpectralDecomposition& dec) {
  if (dec.has_bipartite_mode()) {
    throw std::domain_error(
        "spectrum contains lambda = -1 (bipartite graph); the position series does not converge");
  }
}

void require_vertex(const SpectralDecomposition& dec, VertexId v) {
  if (v >= dec.size()) throw std::out_of_range("vertex id out of range");
}

}  // namespace

bool SpectralDecomposition::has_bipartite_mode() const {
  return (eigenvalues.array() + 1.0).abs().minCoeff() < kBipartiteTolerance;
}

SpectralDecomposition decompose(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("spectral oracle needs at least 2 vertices");
  if (n > kMaxOracleVertices) {
    throw std::invalid_argument("spectral oracle is limited to " +
                                std::to_string(kMaxOracleVertices) + " vertices (got " +
                                std::to_string(n) + ")");
  }
  if (!is_connected(g)) throw std::invalid_argument("spectral oracle needs a connected graph");

  SpectralDecomposition dec;
  dec.degrees.resize(static_cast<Eigen::Index>(n));
  for (VertexId v = 0; v < n; ++v) dec.degrees(v) = static_cast<double>(g.degree(v));
  const Eigen::VectorXd inv_sqrt = dec.degrees.array().rsqrt();

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) s(u, v) = inv_sqrt(u) * inv_sqrt(v);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  dec.eigenvalues = solver.eigenvalues();
  dec.symmetric_eigenvectors = solver.eigenvectors();
  dec.eigenvectors = inv_sqrt.asDiagonal() * dec.symmetric_eigenvectors;
  return dec;
}

Eigen::MatrixXd expansion_coefficients(const SpectralDecomposition& dec,
                                       const RowMatrix& initial_velocity) {
  const auto n = static_cast<Eigen::Index>(dec.size());
  if (initial_velocity.rows() != dec.size()) {
    throw std::invalid_argument("initial velocities do not match the decomposition");
  }
  const auto m = static_cast<Eigen::Index>(initial_velocity.cols());
  Eigen::MatrixXd x0(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index l = 0; l < m; ++l) x0(i, l) = initial_velocity(i, l);
  }
  const Eigen::MatrixXd coefficients =
      dec.symmetric_eigenvectors.transpose() * (dec.degrees.array().sqrt().matrix().asDiagonal() * x0);
  const double scale = std::max(1.0, x0.cwiseAbs().maxCoeff());
  const double error = (dec.eigenvectors * coefficients - x0).cwiseAbs().maxCoeff() / scale;
  if (error > kReconstructionTolerance) {
    throw std::runtime_error("eigenbasis reconstruction error " + std::to_string(error) +
                             " exceeds tolerance");
  }
  return coefficients;
}

RowMatrix closed_form_positions(const SpectralDecomposition& dec,
                                const RowMatrix& initial_velocity) {
  require_non_bipartite(dec);
  Eigen::MatrixXd weighted = expansion_coefficients(dec, initial_velocity);
  const std::size_t drift = dec.drift_index();
  for (Eigen::Index k = 0; k < weighted.rows(); ++k) {
    const double factor =
        static_cast<std::size_t>(k) == drift ? 0.0 : 1.0 / (1.0 - dec.eigenvalues(k));
    weighted.row(k) *= factor;
  }
  const Eigen::MatrixXd limit = dec.eigenvectors * weighted;
  RowMatrix out(initial_velocity.rows(), initial_velocity.cols());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t l = 0; l < out.cols(); ++l) {
      out(i, l) = limit(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l));
    }
  }
  return out;
}

double exact_distance(const SpectralDecomposition& dec, const Eigen::MatrixXd& coefficients,
                      VertexId i, VertexId j) {
  require_non_bipartite(dec);
  require_vertex(dec, i);
  require_vertex(dec, j);
  if (i == j) return 0.0;
  const std::size_t drift = dec.drift_index();
  double total = 0.0;
  for (Eigen::Index l = 0; l < coefficients.cols(); ++l) {
    double component = 0.0;
    for (Eigen::Index k = 0; k < coefficients.rows(); ++k) {
      if (static_cast<std::size_t>(k) == drift) continue;
      component += coefficients(k, l) / (1.0 - dec.eigenvalues(k)) *
                   (dec.eigenvectors(i, k) - dec.eigenvectors(j, k));
    }
    total += component * component;
  }
  return total;
}

double expected_distance(const SpectralDecomposition& dec, std::size_t dim, double x_variance,
                         VertexId i, VertexId j) {
  require_non_bipartite(dec);
  require_vertex(dec, i);
  require_vertex(dec, j);
  if (i == j) return 0.0;
  const std::size_t drift = dec.drift_index();
  double total = 0.0;
  for (Eigen::Index k = 0; k < dec.eigenvectors.cols(); ++k) {
    if (static_cast<std::size_t>(k) == drift) continue;
    const double norm = dec.eigenvectors.col(k).norm();
    const double diff = (dec.eigenvectors(i, k) - dec.eigenvectors(j, k)) / norm;
    const double gap = 1.0 - dec.eigenvalues(k);
    total += static_cast<double>(dim) * x_variance / (gap * gap) * diff * diff;
  }
  return total;
}

double mean_exact_distance(const SpectralDecomposition& dec, std::size_t dim,
                           double x_variance, VertexId i, VertexId j) {
  require_non_bipartite(dec);
  require_vertex(dec, i);
  require_vertex(dec, j);
  if (i == j) return 0.0;
  // d = c' A_l with A = W X0, W = U' K^1/2, so E[d^2] = var * |W' c|^2.
  const std::size_t drift = dec.drift_index();
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dec.size()));
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    if (static_cast<std::size_t>(k) == drift) continue;
    c(k) = (dec.eigenvectors(i, k) - dec.eigenvectors(j, k)) / (1.0 - dec.eigenvalues(k));
  }
  const Eigen::VectorXd mixed =
      dec.degrees.array().sqrt().matrix().asDiagonal() * (dec.symmetric_eigenvectors * c);
  return static_cast<double>(dim) * x_variance * mixed.squaredNorm();
}

QuadraticForms quadratic_forms(const Graph& g, std::span<const double> x) {
  if (x.size() != g.vertex_count()) throw std::invalid_argument("vector does not match graph");
  QuadraticForms q;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const double d = static_cast<double>(g.degree(u));
    q.degree += d * x[u] * x[u];
    for (VertexId v : g.neighbors(u)) {
      // Each edge is seen twice; (x_u - x_v)^2 / 2 per visit.
      const double diff = x[u] - x[v];
      q.laplacian += 0.5 * diff * diff;
    }
  }
  return q;
}

EnergyReport energy_relation_check(const SpectralDecomposition& dec, const Graph& g, Rng& rng,
                                   std::size_t probes) {
  const std::size_t n = dec.size();
  if (g.vertex_count() != n) throw std::invalid_argument("graph does not match decomposition");
  EnergyReport report;
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = dec.eigenvectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    }
    const QuadraticForms q = quadratic_forms(g, v);
    const double expected = (1.0 - dec.eigenvalues(static_cast<Eigen::Index>(k))) * q.degree;
    const double scale = std::max(std::abs(expected), q.degree);
    report.max_relation_residual =
        std::max(report.max_relation_residual, std::abs(q.laplacian - expected) / scale);
  }
  report.relation_holds = report.max_relation_residual < 1e-10;

  report.second_largest_eigenvalue = dec.eigenvalues(static_cast<Eigen::Index>(n) - 2);
  report.energy_bound = 1.0 - report.second_largest_eigenvalue;
  report.min_probe_energy = std::numeric_limits<double>::infinity();
  report.probes = probes;
  double degree_sum = 0.0;
  for (VertexId u = 0; u < n; ++u) degree_sum += static_cast<double>(g.degree(u));
  for (std::size_t p = 0; p < probes; ++p) {
    for (double& value : v) value = rng.uniform(-1.0, 1.0);
    // Remove the K-projection on the constant vector, then K-normalize.
    double k_dot_one = 0.0;
    for (VertexId u = 0; u < n; ++u) k_dot_one += static_cast<double>(g.degree(u)) * v[u];
    const double shift = k_dot_one / degree_sum;
    for (double& value : v) value -= shift;
    const double k_norm = std::sqrt(quadratic_forms(g, v).degree);
    for (double& value : v) value /= k_norm;
    report.min_probe_energy = std::min(report.min_probe_energy, quadratic_forms(g, v).laplacian);
  }
  report.probes_hold = probes == 0 || report.min_probe_energy >= report.energy_bound - 1e-9;
  return report;
}

Eigen::MatrixXd distance_matrix(const RowMatrix& positions) {
  const auto n = static_cast<Eigen::Index>(positions.rows());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = std::sqrt(squared_distance(positions.row(i), positions.row(j)));
    }
  }
  return d;
}

double max_relative_discrepancy(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("distance matrices differ in shape");
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      const double diff = std::abs(a(i, j) - b(i, j));
      worst = std::max(worst, b(i, j) > 0.0 ? diff / b(i, j) : diff);
    }
  }
  return worst;
}

}  // namespace navembed
