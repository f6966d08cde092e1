#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kronhecke/zoo.hpp"

namespace kronhecke::cli {

/// One manifest line: family=NAME params=LIST or group_file=PATH, plus an
/// optional subgroup preset and expected classification outcomes.
struct BatteryEntry {
  std::size_t line = 0;
  std::optional<zoo::FamilySpec> family;
  std::string group_file;  // resolved against the manifest directory
  std::string subgroup;    // preset name, empty for none
  std::map<std::string, std::string> expect;

  std::string label() const;
};

std::vector<BatteryEntry> parse_battery(std::istream& in, const std::string& base_dir = ".");
std::vector<BatteryEntry> load_battery(const std::string& path);

}  // namespace kronhecke::cli
