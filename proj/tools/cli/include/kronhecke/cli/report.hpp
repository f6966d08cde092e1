#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kronhecke/bigint.hpp"
#include "kronhecke/character_table.hpp"
#include "kronhecke/kronecker.hpp"

namespace kronhecke::cli {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

struct Record {
  std::string group;
  std::string name;
  std::vector<std::pair<std::string, std::string>> values;  // formula -> decimal
  bool agree = true;
  nlohmann::ordered_json witness;  // null when absent
  std::vector<std::string> notes;

  void set(const std::string& formula, const BigInt& v);
  void set(const std::string& formula, bool v) { set(formula, BigInt(v ? 1 : 0)); }
  const std::string* get(const std::string& formula) const;
  /// agree = every value equal.
  void agree_if_equal();
};

Record from_count(const std::string& group, const CountReport& r);
nlohmann::ordered_json witness_json(const CharacterTable& t, const KroneckerResult& w, const std::string& reason);

struct Report {
  std::string version;
  nlohmann::ordered_json input;
  std::vector<Record> records;
  std::vector<std::pair<std::string, double>> timings;  // only rendered when requested
  bool with_timings = false;
  bool error = false;

  bool all_agree() const;
};

std::string render(const Report& r, Format f);

}  // namespace kronhecke::cli
