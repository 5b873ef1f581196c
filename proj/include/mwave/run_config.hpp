#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace mwave {

// Canonical, order-independent record of one CLI invocation; round-trips
// through its string form and stamps every artifact header.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> options;

  std::string canonical_string() const;
  static RunConfig parse_canonical(const std::string& s);

  // Rejects keys outside the command's whitelist.
  void validate() const;

  // FNV-1a of the canonical string.
  std::uint64_t config_hash() const;

  // Flat key=value defaults for options not already set; '#' starts a
  // comment line.
  void merge_config_file(const std::string& path);
};

}  // namespace mwave
