#include "mwave/run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mwave/errors.hpp"

namespace mwave {

namespace {

const std::map<std::string, std::set<std::string>>& command_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"kernel",
       {"manifold", "symbol", "t", "theta", "x", "point", "grid", "report",
        "output", "bandlimit", "rel_tol", "nodes_per_decade"}},
      {"validate", {"target", "t", "output", "rel_tol", "nodes_per_decade"}},
      {"cwt",
       {"manifold", "symbol", "field", "t", "output", "rel_tol",
        "nodes_per_decade"}},
      {"reconstruct",
       {"manifold", "symbol", "field", "eta", "L", "target", "output",
        "rel_tol", "nodes_per_decade"}},
      {"holder",
       {"symbol", "field", "tmin", "tmax", "scales", "bandlimit", "resolution",
        "output", "rel_tol", "nodes_per_decade"}},
      {"localize",
       {"manifold", "symbol", "N", "t", "output", "rel_tol",
        "nodes_per_decade"}},
      {"accept", {"output"}},
  };
  return keys;
}

}  // namespace

std::string RunConfig::canonical_string() const {
  std::ostringstream out;
  out << command;
  for (const auto& [k, v] : options) out << ' ' << k << '=' << v;
  return out.str();
}

RunConfig RunConfig::parse_canonical(const std::string& s) {
  RunConfig cfg;
  std::istringstream in(s);
  in >> cfg.command;
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw ConfigError("malformed canonical token: " + tok);
    cfg.options[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return cfg;
}

void RunConfig::validate() const {
  auto it = command_keys().find(command);
  if (it == command_keys().end())
    throw ConfigError("unknown command: " + command);
  for (const auto& [k, v] : options) {
    if (!it->second.count(k))
      throw ConfigError("unknown option '" + k + "' for command " + command);
  }
}

std::uint64_t RunConfig::config_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : canonical_string()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

void RunConfig::merge_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config file line is not key=value: " + line);
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config file line has empty key");
    // Explicit command-line options win over config-file defaults.
    options.try_emplace(key, trim(line.substr(eq + 1)));
  }
}

}  // namespace mwave
