#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "navembed/graph.hpp"
#include "navembed/io.hpp"
#include "navembed/matrix.hpp"
#include "navembed/routing.hpp"
#include "navembed/stats.hpp"

namespace navembed {

enum class Family { kWs, kBa };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

// 20 log-spaced rewiring probabilities from 1e-4 to 1.
std::vector<double> default_p_grid();
// 11 exponents from 2.2 to 4.0 in steps of 0.18.
std::vector<double> default_gamma_grid();

struct SweepSpec {
  Family family = Family::kWs;
  std::vector<double> grid;  // rewiring probabilities (ws) or exponents (ba)
  std::size_t n = 1000;
  std::size_t k = 10;       // ws lattice degree
  std::size_t m_links = 3;  // ba links per new vertex
  std::vector<std::size_t> dims{5, 10, 20};
  std::size_t realizations = 20;
  std::size_t trials = 10000;
  std::uint64_t master_seed = kDefaultSeed;
  double sync_tolerance = 1e-4;
  std::size_t max_iters = 100000;
  std::size_t workers = 1;  // does not affect results

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
  // 5 realizations and 2000 trials.
  void apply_quick_profile();
};

struct CellResult {
  Family family = Family::kWs;
  double param = 0.0;
  std::size_t dim = 0;
  std::size_t realization = 0;
  std::uint64_t seed = 0;  // graph seed of this realization
  std::size_t n = 0;
  std::optional<HopCount> diameter;
  std::optional<double> clustering;
  std::optional<double> success_rate;
  std::optional<double> stretch;
  bool converged = false;
  std::size_t iterations = 0;
  std::string error;  // non-empty if the cell failed
};

struct AggregateRow {
  double param = 0.0;
  std::size_t dim = 0;
  std::size_t realizations = 0;  // cells that completed
  std::size_t failed = 0;
  std::optional<MeanStderr> diameter;
  std::optional<MeanStderr> clustering;
  std::optional<MeanStderr> success_rate;
  std::optional<MeanStderr> stretch;
  std::optional<MeanStderr> iterations;
  double converged_fraction = 0.0;
};

// Shortest-path lengths of all routed pairs vs successfully routed pairs.
struct PathLengthComparison {
  PathLengthDistribution all;
  PathLengthDistribution success;
  std::optional<double> ks;  // empty when nothing was delivered
};

struct ParamPathDistribution {
  double param = 0.0;
  std::size_t dim = 0;
  PathLengthComparison comparison;  // pooled over realizations
};

struct SweepResult {
  SweepSpec spec;
  std::vector<CellResult> cells;  // ordered by (param, dim, realization)
  std::vector<AggregateRow> aggregates;  // ordered by (param, dim)
  std::vector<ParamPathDistribution> path_distributions;  // per param, largest dim

  const AggregateRow* find_aggregate(double param, std::size_t dim) const;
};

// Seed of realization r at one grid value. Keyed on the parameter value, not
// its grid position, so removing grid points leaves other cells unchanged.
std::uint64_t realization_seed(std::uint64_t master_seed, Family family, double param,
                               std::size_t realization);

PathLengthComparison compare_path_lengths(std::span<const RouteResult> results);
PathLengthComparison path_length_comparison(const Graph& g, const RowMatrix& coords,
                                            std::size_t trials, const RngStream& stream);

SweepResult run_ws_sweep(const SweepSpec& spec);
SweepResult run_ba_sweep(const SweepSpec& spec);
SweepResult run_sweep(const SweepSpec& spec);

Table cells_table(const SweepResult& result);
Table aggregate_table(const SweepResult& result);
Table path_distribution_table(const ParamPathDistribution& dist);

// Writes cells, aggregate and one pathdist_<param> file per grid value.
void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& out_dir,
                         OutputFormat format);

}  // namespace navembed
