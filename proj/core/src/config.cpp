#include "navembed/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace navembed {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(where + ": '" + text + "' is not a valid number");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& where) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item =
        trim(std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (item.empty()) throw ConfigError(where + ": empty list entry");
    out.push_back(parse_number<T>(item, where));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

SweepSpec parse_sweep_spec(std::istream& in, std::string_view source_name,
                           std::uint64_t default_seed) {
  std::map<std::string, std::pair<std::string, std::string>> entries;  // key -> (value, where)
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    const std::string content = trim(std::string_view(line).substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    static const char* const kKeys[] = {"family", "n",    "k",    "mlinks", "p_grid",    "gamma_grid",
                                        "dims",   "realizations", "trials", "seed", "eps", "max_iters"};
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
    if (value.empty()) throw ConfigError(where + ": key '" + key + "' has no value");
    if (!entries.emplace(key, std::make_pair(value, where)).second) {
      throw ConfigError(where + ": key '" + key + "' given twice");
    }
  }

  auto get = [&](const char* key) -> const std::pair<std::string, std::string>* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  SweepSpec spec;
  spec.master_seed = default_seed;
  if (const auto* e = get("family")) {
    try {
      spec.family = parse_family(e->first);
    } catch (const std::invalid_argument& err) {
      throw ConfigError(e->second + ": " + err.what());
    }
  }
  if (spec.family == Family::kWs) {
    spec.grid = default_p_grid();
    if (get("gamma_grid")) throw ConfigError(get("gamma_grid")->second + ": gamma_grid needs family = ba");
    if (const auto* e = get("p_grid")) spec.grid = parse_list<double>(e->first, e->second);
  } else {
    spec.grid = default_gamma_grid();
    if (get("p_grid")) throw ConfigError(get("p_grid")->second + ": p_grid needs family = ws");
    if (const auto* e = get("gamma_grid")) spec.grid = parse_list<double>(e->first, e->second);
  }
  if (const auto* e = get("n")) spec.n = parse_number<std::size_t>(e->first, e->second);
  if (const auto* e = get("k")) spec.k = parse_number<std::size_t>(e->first, e->second);
  if (const auto* e = get("mlinks")) spec.m_links = parse_number<std::size_t>(e->first, e->second);
  if (const auto* e = get("dims")) spec.dims = parse_list<std::size_t>(e->first, e->second);
  if (const auto* e = get("realizations")) spec.realizations = parse_number<std::size_t>(e->first, e->second);
  if (const auto* e = get("trials")) spec.trials = parse_number<std::size_t>(e->first, e->second);
  if (const auto* e = get("seed")) spec.master_seed = parse_number<std::uint64_t>(e->first, e->second);
  if (const auto* e = get("eps")) spec.sync_tolerance = parse_number<double>(e->first, e->second);
  if (const auto* e = get("max_iters")) spec.max_iters = parse_number<std::size_t>(e->first, e->second);

  try {
    spec.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(std::string(source_name) + ": " + err.what());
  }
  return spec;
}

SweepSpec read_sweep_spec_file(const std::filesystem::path& path, std::uint64_t default_seed) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file '" + path.string() + "'");
  return parse_sweep_spec(in, path.string(), default_seed);
}

}  // namespace navembed
