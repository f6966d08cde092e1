#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kronhecke/character_table.hpp"
#include "kronhecke/kronecker.hpp"
#include "kronhecke/cli/battery.hpp"
#include "kronhecke/cli/report.hpp"
#include "kronhecke/orbits.hpp"
#include "kronhecke/zoo.hpp"

namespace kronhecke::cli {

/// Tables with more classes than this skip the kappa-enumeration formulas.
inline constexpr std::size_t kKappaClassCap = 64;

struct RunConfig {
  std::string command;
  std::optional<zoo::FamilySpec> family;
  std::string group_file;
  std::string table_file;
  std::vector<std::uint32_t> d{1, 2};
  std::string subgroup;                  // preset name
  std::vector<Element> subgroup_gens;    // explicit generators (element indices)
  std::vector<std::size_t> irreps;       // kron: one tuple
  std::vector<std::string> formulas;     // restrict verify output to these formulas
  std::map<std::string, std::string> expect;
  Format format = Format::json;
  std::string out;
  std::size_t order_cap = kDefaultOrderCap;
  std::uint64_t orbit_cap = kDefaultOrbitCap;
  std::string battery;
  unsigned jobs = 1;
  bool timings = false;
};

/// Orbit partitions computed on demand, one per d; nullptr when over the cap.
class OracleCache {
 public:
  const OrbitPartition* get(const GroupTable& g, std::uint32_t d, std::uint64_t cap);

 private:
  std::map<std::uint32_t, std::optional<OrbitPartition>> done_;
};

/// A group (when known), its character table and the shared derived data.
struct Subject {
  std::string label;
  std::optional<zoo::FamilySpec> family;
  std::shared_ptr<const GroupTable> group;
  std::shared_ptr<const CharacterTable> table;
  std::shared_ptr<const FusionTensor> tensor;  // null above kKappaClassCap
  std::shared_ptr<OracleCache> oracles = std::make_shared<OracleCache>();
};

/// Builds the group named by the config and computes its table.
Subject load_subject(const RunConfig& cfg, Report* timing = nullptr);

/// A subgroup request resolved against a subject. For the `diagonal` preset the
/// ambient group is G x G rather than G itself.
struct SubgroupContext {
  std::string name;
  std::shared_ptr<const GroupTable> ambient;
  std::shared_ptr<const CharacterTable> table;
  SubgroupSpec k;
};

std::optional<SubgroupContext> resolve_subgroup(const Subject& s, const std::string& preset,
                                                const std::vector<Element>& gens);

void verify_records(const Subject& s, const RunConfig& cfg, std::vector<Record>& out);
void classify_records(const Subject& s, const RunConfig& cfg, std::vector<Record>& out);

struct Outcome {
  Report report;
  int exit_code = 0;
  std::string raw;  // set by build/chartab in text format: emitted verbatim
};

int exit_code_for(const Report& r);

Outcome cmd_build(const RunConfig& cfg);
Outcome cmd_chartab(const RunConfig& cfg);
Outcome cmd_kron(const RunConfig& cfg);
Outcome cmd_verify(const RunConfig& cfg);
Outcome cmd_classify(const RunConfig& cfg);
Outcome cmd_scan(const RunConfig& cfg);

Outcome run(const RunConfig& cfg);

}  // namespace kronhecke::cli
