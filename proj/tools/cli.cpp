#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "navembed/generators.hpp"
#include "navembed/graph.hpp"
#include "navembed/routing.hpp"
#include "navembed/spectral.hpp"

namespace navembed::cli {
namespace {

namespace fs = std::filesystem;

void require_writable_parent(const fs::path& path, const std::string& flag) {
  const fs::path parent = path.has_parent_path() ? path.parent_path() : fs::path(".");
  if (!fs::is_directory(parent)) {
    throw ConfigError(flag + ": directory '" + parent.string() + "' does not exist");
  }
}

void require_positive(std::size_t value, const std::string& flag) {
  if (value < 1) throw ConfigError(flag + " must be >= 1");
}

// Re-throws validation errors from the core library as usage errors.
template <typename F>
void validate(F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int run_generate(const RunConfig& cfg, const GenerateOptions& o, std::ostream& out) {
  Graph g;
  if (o.model == Family::kWs) {
    g = watts_strogatz({.n = o.n, .k = o.k, .p = o.p, .seed = cfg.seed});
  } else {
    g = generalized_ba({.n = o.n, .m_links = o.m_links, .k0 = o.k0, .seed = cfg.seed});
  }
  write_edge_list_file(g, o.graph_out);
  out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
  return kExitOk;
}

int run_embed(const RunConfig& cfg, const EmbedOptions& o, std::ostream& out) {
  const Graph g = read_edge_list_file(o.graph_in);
  EmbeddingConfig ec;
  ec.dim = o.dim;
  ec.sync_tolerance = o.eps;
  ec.max_iters = o.max_iters;
  ec.seed = cfg.seed;
  const EmbeddingResult r = embed(g, ec);
  write_coordinates_file(r.positions, o.coords_out);
  const double worst = *std::max_element(r.sync_errors.begin(), r.sync_errors.end());
  out << "iterations " << r.iterations << " converged " << (r.converged ? 1 : 0)
      << " max_sync_error " << format_double(worst, 6) << " embedded " << r.embedded_vertices.size()
      << '/' << g.vertex_count() << '\n';
  return kExitOk;
}

void check_coords(const Graph& g, const RowMatrix& coords) {
  if (coords.rows() != g.vertex_count()) {
    throw IoError("coordinates have " + std::to_string(coords.rows()) + " rows but the graph has " +
                  std::to_string(g.vertex_count()) + " vertices");
  }
}

int run_route(const RunConfig& cfg, const RouteOptions& o, std::ostream& out) {
  const Graph g = read_edge_list_file(o.graph_in);
  const RowMatrix coords = read_coordinates_file(o.coords_in);
  check_coords(g, coords);
  const auto results = run_trials(g, coords, o.trials, RngStream(cfg.seed));
  Table t;
  t.columns = {"source", "target", "success", "path_len", "shortest_len", "reason"};
  for (const RouteResult& r : results) {
    t.add_row({Cell::unsigned_integer(r.source), Cell::unsigned_integer(r.target),
               Cell::boolean(r.success), Cell::unsigned_integer(r.path_length()),
               r.shortest_length == kUnreachable ? Cell::missing()
                                                 : Cell::unsigned_integer(r.shortest_length),
               Cell::string(std::string(to_string(r.reason)))});
  }
  emit_file(t, cfg.format, o.out);
  if (!results.empty()) {
    const auto s = stretch(results);
    out << "trials " << results.size() << " success_rate " << format_double(success_rate(results), 6)
        << " stretch " << (s ? format_double(*s, 6) : std::string(kNotAvailable)) << '\n';
  }
  return kExitOk;
}

int run_pathdist(const RunConfig& cfg, const PathdistOptions& o, std::ostream& out) {
  const Graph g = read_edge_list_file(o.graph_in);
  const RowMatrix coords = read_coordinates_file(o.coords_in);
  check_coords(g, coords);
  ParamPathDistribution dist;
  dist.comparison = path_length_comparison(g, coords, o.trials, RngStream(cfg.seed));
  emit_file(path_distribution_table(dist), cfg.format, o.out);
  out << "ks " << (dist.comparison.ks ? format_double(*dist.comparison.ks, 6) : std::string(kNotAvailable))
      << '\n';
  return kExitOk;
}

int run_oracle(const RunConfig& cfg, const OracleOptions& o, std::ostream& out) {
  const Graph g = read_edge_list_file(o.graph_in);
  const SpectralDecomposition dec = decompose(g);
  Rng init(cfg.seed);
  RowMatrix x0(g.vertex_count(), o.dim);
  for (double& v : x0.data()) v = init.uniform(-0.5, 0.5);

  const RowMatrix limit = closed_form_positions(dec, x0);
  const EmbeddingResult iterative = embed_from(g, x0, o.eps, o.max_iters);
  const double discrepancy =
      max_relative_discrepancy(distance_matrix(iterative.positions), distance_matrix(limit));
  Rng probes = RngStream(cfg.seed).derive("probes").engine();
  const EnergyReport energy = energy_relation_check(dec, g, probes);

  nlohmann::ordered_json report;
  report["n"] = g.vertex_count();
  report["edges"] = g.edge_count();
  report["dim"] = o.dim;
  report["seed"] = cfg.seed;
  report["spectrum"] = {{"min", dec.eigenvalues.minCoeff()},
                        {"max", dec.eigenvalues.maxCoeff()},
                        {"second_largest", energy.second_largest_eigenvalue},
                        {"spectral_gap", energy.energy_bound},
                        {"bipartite", dec.has_bipartite_mode()}};
  report["embedding"] = {{"eps", o.eps},
                         {"iterations", iterative.iterations},
                         {"converged", iterative.converged},
                         {"max_relative_distance_discrepancy", discrepancy}};
  report["energy"] = {{"max_relation_residual", energy.max_relation_residual},
                      {"relation_holds", energy.relation_holds},
                      {"energy_bound", energy.energy_bound},
                      {"min_probe_energy", energy.min_probe_energy},
                      {"probes", energy.probes},
                      {"probes_hold", energy.probes_hold}};
  const std::string text = report.dump(2) + "\n";
  if (o.out) {
    std::ofstream file(*o.out, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) throw IoError("cannot write '" + o.out->string() + "'");
  } else {
    out << text;
  }
  return kExitOk;
}

int run_sweep_command(const RunConfig& cfg, const SweepOptions& o, std::ostream& out) {
  SweepSpec spec = read_sweep_spec_file(o.spec, cfg.seed);
  if (o.quick) spec.apply_quick_profile();
  spec.workers = o.workers;
  const SweepResult result = run_sweep(spec);
  write_sweep_outputs(result, o.out_dir, cfg.format);
  std::size_t failed = 0;
  for (const auto& c : result.cells) failed += c.error.empty() ? 0 : 1;
  out << "cells " << result.cells.size() << " failed " << failed << '\n';
  return kExitOk;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"navembed: self-organized hidden-metric embedding and greedy routing", "navembed"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "csv";
  int verbosity = 1;
  app.add_option("--seed", cfg.seed, "Master RNG seed")->capture_default_str();
  app.add_option("--format", format, "Output format for tables")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--verbosity", verbosity, "0 quiet, 1 warnings, 2 info, 3 debug")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();

  GenerateOptions gen;
  std::string model;
  std::optional<double> gamma;
  std::optional<double> k0;
  auto* generate = app.add_subcommand("generate", "Generate a WS or generalized BA graph");
  generate->add_option("--model", model, "ws or ba")->required()->check(CLI::IsMember({"ws", "ba"}));
  generate->add_option("--n", gen.n, "Vertex count")->required();
  auto* k_opt = generate->add_option("--k", gen.k, "WS lattice degree (even)");
  auto* p_opt = generate->add_option("--p", gen.p, "WS rewiring probability");
  auto* m_opt = generate->add_option("--mlinks", gen.m_links, "BA links per new vertex");
  auto* gamma_opt = generate->add_option("--gamma", gamma, "BA degree exponent (> 2)");
  auto* k0_opt = generate->add_option("--k0", k0, "BA attachment offset (> -mlinks)");
  gamma_opt->excludes(k0_opt);
  generate->add_option("--graph-out", gen.graph_out, "Edge-list output path")->required();

  EmbedOptions emb;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a graph by velocity averaging");
  embed_cmd->add_option("--graph-in", emb.graph_in)->required()->check(CLI::ExistingFile);
  embed_cmd->add_option("--dim", emb.dim, "Metric-space dimension")->capture_default_str();
  embed_cmd->add_option("--eps", emb.eps, "Synchronization tolerance")->capture_default_str();
  embed_cmd->add_option("--max-iters", emb.max_iters)->capture_default_str();
  embed_cmd->add_option("--coords-out", emb.coords_out)->required();

  RouteOptions rt;
  auto* route_cmd = app.add_subcommand("route", "Greedy-route random pairs over coordinates");
  route_cmd->add_option("--graph-in", rt.graph_in)->required()->check(CLI::ExistingFile);
  route_cmd->add_option("--coords-in", rt.coords_in)->required()->check(CLI::ExistingFile);
  route_cmd->add_option("--trials", rt.trials)->capture_default_str();
  route_cmd->add_option("--out", rt.out)->required();

  OracleOptions orc;
  std::optional<std::string> oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the embedding with its spectral closed form");
  oracle_cmd->add_option("--graph-in", orc.graph_in)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--dim", orc.dim)->capture_default_str();
  oracle_cmd->add_option("--eps", orc.eps, "Tolerance of the iterative run")->capture_default_str();
  oracle_cmd->add_option("--max-iters", orc.max_iters)->capture_default_str();
  oracle_cmd->add_option("--out", oracle_out, "JSON report path (default stdout)");

  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a WS or BA parameter sweep");
  sweep_cmd->add_option("--spec", sw.spec, "key = value sweep file")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--out-dir", sw.out_dir)->required();
  sweep_cmd->add_flag("--quick", sw.quick, "5 realizations, 2000 trials");
  sweep_cmd->add_option("--workers", sw.workers)->capture_default_str();

  PathdistOptions pd;
  auto* pathdist_cmd = app.add_subcommand("pathdist", "Shortest-path length distributions of routed pairs");
  pathdist_cmd->add_option("--graph-in", pd.graph_in)->required()->check(CLI::ExistingFile);
  pathdist_cmd->add_option("--coords-in", pd.coords_in)->required()->check(CLI::ExistingFile);
  pathdist_cmd->add_option("--trials", pd.trials)->capture_default_str();
  pathdist_cmd->add_option("--out", pd.out)->required();

  // CLI11 wants the arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  cfg.format = parse_output_format(format);
  cfg.verbosity = static_cast<LogLevel>(verbosity);

  if (generate->parsed()) {
    gen.model = parse_family(model);
    validate([&] {
      if (gen.model == Family::kWs) {
        if (m_opt->count() || gamma_opt->count() || k0_opt->count()) {
          throw ConfigError("--mlinks/--gamma/--k0 apply to --model ba only");
        }
        WsParams{.n = gen.n, .k = gen.k, .p = gen.p}.validate();
      } else {
        if (k_opt->count() || p_opt->count()) throw ConfigError("--k/--p apply to --model ws only");
        if (!gamma && !k0) throw ConfigError("--model ba needs --gamma or --k0");
        gen.k0 = gamma ? gamma_to_k0(*gamma, gen.m_links) : *k0;
        BaParams{.n = gen.n, .m_links = gen.m_links, .k0 = gen.k0}.validate();
      }
    });
    require_writable_parent(gen.graph_out, "--graph-out");
    cfg.options = gen;
  } else if (embed_cmd->parsed()) {
    validate([&] {
      EmbeddingConfig{.dim = emb.dim, .sync_tolerance = emb.eps, .max_iters = emb.max_iters}.validate();
    });
    require_writable_parent(emb.coords_out, "--coords-out");
    cfg.options = emb;
  } else if (route_cmd->parsed()) {
    require_writable_parent(rt.out, "--out");
    cfg.options = rt;
  } else if (oracle_cmd->parsed()) {
    require_positive(orc.dim, "--dim");
    require_positive(orc.max_iters, "--max-iters");
    if (!(orc.eps > 0.0)) throw ConfigError("--eps must be > 0");
    if (oracle_out) {
      orc.out = *oracle_out;
      require_writable_parent(*orc.out, "--out");
    }
    cfg.options = orc;
  } else if (sweep_cmd->parsed()) {
    require_positive(sw.workers, "--workers");
    // Parse the spec file up front so that bad keys fail before any work.
    (void)read_sweep_spec_file(sw.spec);
    cfg.options = sw;
  } else {
    require_positive(pd.trials, "--trials");
    require_writable_parent(pd.out, "--out");
    cfg.options = pd;
  }
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  set_log_level(config.verbosity);
  try {
    return std::visit(
        [&](const auto& o) -> int {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, GenerateOptions>) return run_generate(config, o, out);
          if constexpr (std::is_same_v<T, EmbedOptions>) return run_embed(config, o, out);
          if constexpr (std::is_same_v<T, RouteOptions>) return run_route(config, o, out);
          if constexpr (std::is_same_v<T, OracleOptions>) return run_oracle(config, o, out);
          if constexpr (std::is_same_v<T, SweepOptions>) return run_sweep_command(config, o, out);
          if constexpr (std::is_same_v<T, PathdistOptions>) return run_pathdist(config, o, out);
        },
        config.options);
  } catch (const ConfigError& e) {
    err << "navembed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "navembed: " << e.what() << '\n';
    return kExitRuntime;
  }
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "navembed: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "navembed: " << e.what() << '\n';
    return kExitRuntime;
  }
  return run(config, std::cout, std::cerr);
}

}  // namespace navembed::cli
