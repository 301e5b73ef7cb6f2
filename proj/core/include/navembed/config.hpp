#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string_view>

#include "navembed/experiments.hpp"

namespace navembed {

// Invalid command line or configuration; maps to exit code 1.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses a flat "key = value" sweep file. Blank lines and '#' comments
// (whole-line or trailing) are ignored. Recognized keys: family, n, k,
// mlinks, p_grid, gamma_grid, dims, realizations, trials, seed, eps,
// max_iters. Lists are comma separated.
// Unset keys keep the full-scale defaults of SweepSpec; an absent seed key
// means default_seed. Throws ConfigError naming the key and line on any
// problem, including a spec that fails SweepSpec::validate().
SweepSpec parse_sweep_spec(std::istream& in, std::string_view source_name = "<spec>",
                           std::uint64_t default_seed = kDefaultSeed);
SweepSpec read_sweep_spec_file(const std::filesystem::path& path,
                               std::uint64_t default_seed = kDefaultSeed);

}  // namespace navembed
