#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "navembed/config.hpp"
#include "navembed/embedding.hpp"
#include "navembed/experiments.hpp"
#include "navembed/io.hpp"
#include "navembed/log.hpp"

namespace navembed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

struct GenerateOptions {
  Family model = Family::kWs;
  std::size_t n = 1000;
  std::size_t k = 10;
  double p = 0.0;
  std::size_t m_links = 3;
  double k0 = 0.0;  // resolved from --gamma or --k0
  std::filesystem::path graph_out;
};

struct EmbedOptions {
  std::filesystem::path graph_in;
  std::size_t dim = 20;
  double eps = 1e-4;
  std::size_t max_iters = 100000;
  std::filesystem::path coords_out;
};

struct RouteOptions {
  std::filesystem::path graph_in;
  std::filesystem::path coords_in;
  std::size_t trials = 10000;
  std::filesystem::path out;
};

struct OracleOptions {
  std::filesystem::path graph_in;
  std::size_t dim = 5;
  double eps = 1e-8;
  std::size_t max_iters = 10000000;
  std::optional<std::filesystem::path> out;  // stdout when unset
};

struct SweepOptions {
  std::filesystem::path spec;
  std::filesystem::path out_dir;
  bool quick = false;
  std::size_t workers = 1;
};

struct PathdistOptions {
  std::filesystem::path graph_in;
  std::filesystem::path coords_in;
  std::size_t trials = 10000;
  std::filesystem::path out;
};

using SubcommandOptions = std::variant<GenerateOptions, EmbedOptions, RouteOptions, OracleOptions,
                                       SweepOptions, PathdistOptions>;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::kCsv;
  LogLevel verbosity = LogLevel::kWarning;
  SubcommandOptions options;
};

// --help / --version; carries the text to print.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses arguments (without the program name). Throws ConfigError naming the
// offending flag or constraint, or HelpRequested.
RunConfig parse_config(const std::vector<std::string>& args);

// Executes a parsed configuration. Returns an exit code; diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace navembed::cli
