#include "navembed/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "navembed/embedding.hpp"
#include "navembed/generators.hpp"
#include "navembed/log.hpp"

namespace navembed {
namespace {

// All dims of one (param, realization) share a graph.
struct WorkUnit {
  std::size_t param_index;
  std::size_t realization;
};

struct UnitOutput {
  std::vector<CellResult> cells;  // one per dim
  std::vector<PathLengthComparison> paths;  // one per dim
};

Graph generate(const SweepSpec& spec, double param, std::uint64_t seed) {
  if (spec.family == Family::kWs) {
    return watts_strogatz({.n = spec.n, .k = spec.k, .p = param, .seed = seed});
  }
  return generalized_ba(
      {.n = spec.n, .m_links = spec.m_links, .k0 = gamma_to_k0(param, spec.m_links), .seed = seed});
}

UnitOutput run_unit(const SweepSpec& spec, const WorkUnit& unit) {
  const double param = spec.grid[unit.param_index];
  const std::uint64_t seed = realization_seed(spec.master_seed, spec.family, param, unit.realization);
  UnitOutput out;
  for (std::size_t dim : spec.dims) {
    CellResult cell;
    cell.family = spec.family;
    cell.param = param;
    cell.dim = dim;
    cell.realization = unit.realization;
    cell.seed = seed;
    cell.n = spec.n;
    out.cells.push_back(cell);
  }
  out.paths.resize(spec.dims.size());

  Graph g;
  try {
    g = generate(spec, param, seed);
    const HopCount diam = diameter(g);
    const double clustering = clustering_coefficient(g);
    for (auto& cell : out.cells) {
      cell.diameter = diam;
      cell.clustering = clustering;
    }
  } catch (const std::exception& e) {
    for (auto& cell : out.cells) cell.error = e.what();
    return out;
  }

  const RngStream base(seed);
  for (std::size_t d = 0; d < spec.dims.size(); ++d) {
    CellResult& cell = out.cells[d];
    try {
      EmbeddingConfig cfg;
      cfg.dim = spec.dims[d];
      cfg.sync_tolerance = spec.sync_tolerance;
      cfg.max_iters = spec.max_iters;
      cfg.seed = base.derive({hash_label("embed"), spec.dims[d]}).seed();
      const EmbeddingResult embedding = embed(g, cfg);
      cell.converged = embedding.converged;
      cell.iterations = embedding.iterations;
      const auto results = run_trials(g, embedding.positions, spec.trials,
                                      base.derive({hash_label("route"), spec.dims[d]}));
      if (!results.empty()) {
        cell.success_rate = success_rate(results);
        cell.stretch = stretch(results);
      }
      out.paths[d] = compare_path_lengths(results);
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  }
  return out;
}

std::optional<MeanStderr> summarize(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  return mean_stderr(values);
}

void add_summary(std::vector<Cell>& row, const std::optional<MeanStderr>& s) {
  if (!s) {
    row.push_back(Cell::missing());
    row.push_back(Cell::missing());
    return;
  }
  row.push_back(Cell::number(s->mean, 6));
  row.push_back(s->standard_error ? Cell::number(*s->standard_error, 6) : Cell::missing());
}

template <typename T>
Cell optional_cell(const std::optional<T>& value) {
  if (!value) return Cell::missing();
  if constexpr (std::is_integral_v<T>) {
    return Cell::unsigned_integer(*value);
  } else {
    return Cell::number(*value, 17);
  }
}

SweepResult run(const SweepSpec& spec) {
  spec.validate();
  std::vector<WorkUnit> units;
  for (std::size_t p = 0; p < spec.grid.size(); ++p) {
    for (std::size_t r = 0; r < spec.realizations; ++r) units.push_back({p, r});
  }
  std::vector<UnitOutput> outputs(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      outputs[i] = run_unit(spec, units[i]);
      log_info("sweep: " + std::string(to_string(spec.family)) + " param " +
               format_shortest(spec.grid[units[i].param_index]) + " realization " +
               std::to_string(units[i].realization) + " done");
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.workers, units.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  SweepResult result;
  result.spec = spec;
  const std::size_t dims = spec.dims.size();
  const std::size_t largest_dim =
      static_cast<std::size_t>(std::max_element(spec.dims.begin(), spec.dims.end()) - spec.dims.begin());
  for (std::size_t p = 0; p < spec.grid.size(); ++p) {
    ParamPathDistribution pooled;
    pooled.param = spec.grid[p];
    pooled.dim = spec.dims[largest_dim];
    for (std::size_t d = 0; d < dims; ++d) {
      std::vector<double> diam, clus, succ, str, iters;
      AggregateRow row;
      row.param = spec.grid[p];
      row.dim = spec.dims[d];
      std::size_t converged = 0;
      for (std::size_t r = 0; r < spec.realizations; ++r) {
        const UnitOutput& unit = outputs[p * spec.realizations + r];
        const CellResult& cell = unit.cells[d];
        result.cells.push_back(cell);
        if (!cell.error.empty()) {
          ++row.failed;
          continue;
        }
        ++row.realizations;
        if (cell.diameter) diam.push_back(static_cast<double>(*cell.diameter));
        if (cell.clustering) clus.push_back(*cell.clustering);
        if (cell.success_rate) succ.push_back(*cell.success_rate);
        if (cell.stretch) str.push_back(*cell.stretch);
        iters.push_back(static_cast<double>(cell.iterations));
        if (cell.converged) ++converged;
        if (d == largest_dim) {
          pooled.comparison.all.merge(unit.paths[d].all);
          pooled.comparison.success.merge(unit.paths[d].success);
        }
      }
      row.diameter = summarize(diam);
      row.clustering = summarize(clus);
      row.success_rate = summarize(succ);
      row.stretch = summarize(str);
      row.iterations = summarize(iters);
      row.converged_fraction =
          row.realizations ? static_cast<double>(converged) / static_cast<double>(row.realizations) : 0.0;
      result.aggregates.push_back(row);
    }
    pooled.comparison.ks = ks_statistic(pooled.comparison.all, pooled.comparison.success);
    result.path_distributions.push_back(std::move(pooled));
  }
  return result;
}

}  // namespace

std::string_view to_string(Family family) { return family == Family::kWs ? "ws" : "ba"; }

Family parse_family(std::string_view text) {
  if (text == "ws") return Family::kWs;
  if (text == "ba") return Family::kBa;
  throw std::invalid_argument("family must be ws or ba");
}

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(std::pow(10.0, -4.0 + 4.0 * i / 19.0));
  grid.back() = 1.0;
  return grid;
}

std::vector<double> default_gamma_grid() {
  std::vector<double> grid;
  // Built from integer hundredths so each point is the double nearest its decimal.
  for (int i = 0; i <= 10; ++i) grid.push_back((220 + 18 * i) / 100.0);
  return grid;
}

void SweepSpec::validate() const {
  if (grid.empty()) throw std::invalid_argument("parameter grid must not be empty");
  if (dims.empty()) throw std::invalid_argument("dims must not be empty");
  if (realizations < 1) throw std::invalid_argument("realizations must be >= 1");
  for (std::size_t d : dims) {
    if (d < 1) throw std::invalid_argument("every dim must be >= 1");
  }
  if (!(sync_tolerance > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (family == Family::kWs) {
    for (double p : grid) WsParams{.n = n, .k = k, .p = p}.validate();
  } else {
    for (double gamma : grid) {
      if (!(gamma > 2.0)) {
        throw std::invalid_argument("every gamma must be > 2 so that k0 > -mlinks (got " +
                                    format_shortest(gamma) + ")");
      }
      BaParams{.n = n, .m_links = m_links, .k0 = gamma_to_k0(gamma, m_links)}.validate();
    }
  }
}

void SweepSpec::apply_quick_profile() {
  realizations = 5;
  trials = 2000;
}

const AggregateRow* SweepResult::find_aggregate(double param, std::size_t dim) const {
  for (const auto& row : aggregates) {
    if (row.param == param && row.dim == dim) return &row;
  }
  return nullptr;
}

std::uint64_t realization_seed(std::uint64_t master_seed, Family family, double param,
                               std::size_t realization) {
  return RngStream(master_seed)
      .derive({hash_label(to_string(family)), std::bit_cast<std::uint64_t>(param), realization})
      .seed();
}

PathLengthComparison compare_path_lengths(std::span<const RouteResult> results) {
  PathLengthComparison out;
  for (const RouteResult& r : results) {
    if (r.shortest_length == kUnreachable) {
      ++out.all.unreachable;
      continue;
    }
    out.all.add(r.shortest_length);
    if (r.success) out.success.add(r.shortest_length);
  }
  out.ks = ks_statistic(out.all, out.success);
  return out;
}

PathLengthComparison path_length_comparison(const Graph& g, const RowMatrix& coords,
                                            std::size_t trials, const RngStream& stream) {
  if (trials < 1) throw std::invalid_argument("path length comparison needs trials >= 1");
  const auto results = run_trials(g, coords, trials, stream);
  return compare_path_lengths(results);
}

SweepResult run_ws_sweep(const SweepSpec& spec) {
  if (spec.family != Family::kWs) throw std::invalid_argument("run_ws_sweep needs family ws");
  return run(spec);
}

SweepResult run_ba_sweep(const SweepSpec& spec) {
  if (spec.family != Family::kBa) throw std::invalid_argument("run_ba_sweep needs family ba");
  for (double gamma : spec.grid) {
    if (!(gamma > 2.0 && gamma <= 4.0)) {
      throw std::invalid_argument("ba sweep needs every gamma in (2, 4]");
    }
  }
  return run(spec);
}

SweepResult run_sweep(const SweepSpec& spec) {
  return spec.family == Family::kWs ? run_ws_sweep(spec) : run_ba_sweep(spec);
}

Table cells_table(const SweepResult& result) {
  Table t;
  t.columns = {"family", "param", "dim", "realization", "seed", "n", "diameter", "clustering",
               "success_rate", "stretch", "converged", "iters"};
  for (const CellResult& c : result.cells) {
    t.add_row({Cell::string(std::string(to_string(c.family))), Cell::shortest(c.param),
               Cell::unsigned_integer(c.dim), Cell::unsigned_integer(c.realization),
               Cell::unsigned_integer(c.seed), Cell::unsigned_integer(c.n), optional_cell(c.diameter),
               optional_cell(c.clustering), optional_cell(c.success_rate), optional_cell(c.stretch),
               c.error.empty() ? Cell::boolean(c.converged) : Cell::missing(),
               c.error.empty() ? Cell::unsigned_integer(c.iterations) : Cell::missing()});
  }
  return t;
}

Table aggregate_table(const SweepResult& result) {
  Table t;
  t.columns = {"param",           "dim",
               "realizations",    "failed",
               "diameter_mean",   "diameter_stderr",
               "clustering_mean", "clustering_stderr",
               "success_rate_mean", "success_rate_stderr",
               "stretch_mean",    "stretch_stderr",
               "iters_mean",      "iters_stderr",
               "converged_fraction"};
  for (const AggregateRow& a : result.aggregates) {
    std::vector<Cell> row{Cell::shortest(a.param), Cell::unsigned_integer(a.dim),
                          Cell::unsigned_integer(a.realizations), Cell::unsigned_integer(a.failed)};
    add_summary(row, a.diameter);
    add_summary(row, a.clustering);
    add_summary(row, a.success_rate);
    add_summary(row, a.stretch);
    add_summary(row, a.iterations);
    row.push_back(Cell::number(a.converged_fraction, 6));
    t.add_row(std::move(row));
  }
  return t;
}

Table path_distribution_table(const ParamPathDistribution& dist) {
  Table t;
  t.columns = {"L", "count_all", "count_success"};
  for (const auto& [length, count] : dist.comparison.all.histogram) {
    const auto it = dist.comparison.success.histogram.find(length);
    const std::uint64_t delivered = it == dist.comparison.success.histogram.end() ? 0 : it->second;
    t.add_row({Cell::unsigned_integer(length), Cell::unsigned_integer(count),
               Cell::unsigned_integer(delivered)});
  }
  return t;
}

void write_sweep_outputs(const SweepResult& result, const std::filesystem::path& out_dir,
                         OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory '" + out_dir.string() + "': " + ec.message());
  const std::string ext(file_extension(format));
  emit_file(cells_table(result), format, out_dir / ("cells" + ext));
  emit_file(aggregate_table(result), format, out_dir / ("aggregate" + ext));
  for (const auto& dist : result.path_distributions) {
    emit_file(path_distribution_table(dist), format,
              out_dir / ("pathdist_" + format_shortest(dist.param) + ext));
  }
}

}  // namespace navembed
