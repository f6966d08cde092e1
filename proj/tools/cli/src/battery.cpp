#include "kronhecke/cli/battery.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kronhecke/error.hpp"

namespace kronhecke::cli {

std::string BatteryEntry::label() const {
  std::string s = family ? family->describe() : "file:" + std::filesystem::path(group_file).filename().string();
  if (!subgroup.empty()) s += "/" + subgroup;
  return s;
}

std::vector<BatteryEntry> parse_battery(std::istream& in, const std::string& base_dir) {
  std::vector<BatteryEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    BatteryEntry e;
    e.line = number;
    std::string name, params;
    bool any = false;
    while (words >> word) {
      any = true;
      const auto eq = word.find('=');
      if (eq == std::string::npos) throw FormatError("format error: battery line " + std::to_string(number) + ": expected key=value");
      const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
      if (key == "family") {
        name = value;
      } else if (key == "params") {
        params = value;
      } else if (key == "group_file") {
        e.group_file = (std::filesystem::path(base_dir) / value).string();
      } else if (key == "subgroup") {
        e.subgroup = value;
      } else if (key == "expect") {
        std::istringstream items(value);
        std::string item;
        while (std::getline(items, item, ',')) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) throw FormatError("format error: battery line " + std::to_string(number) + ": bad expectation");
          e.expect[item.substr(0, colon)] = item.substr(colon + 1);
        }
      } else {
        throw FormatError("format error: battery line " + std::to_string(number) + ": unknown key '" + key + "'");
      }
    }
    if (!any) continue;
    if (!name.empty()) e.family = zoo::parse_family(name, params);
    if (e.family.has_value() == !e.group_file.empty()) {
      throw FormatError("format error: battery line " + std::to_string(number) + ": need exactly one of family, group_file");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<BatteryEntry> load_battery(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open battery '" + path + "'");
  return parse_battery(in, std::filesystem::path(path).parent_path().string());
}

}  // namespace kronhecke::cli
