#include "kronhecke/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "kronhecke/error.hpp"

#ifndef KRONHECKE_VERSION
#define KRONHECKE_VERSION "0.0.0"
#endif

namespace kronhecke::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

BigInt big(std::uint64_t v) { return to_big(v); }

Record record(std::string group, std::string name) {
  Record r;
  r.group = std::move(group);
  r.name = std::move(name);
  return r;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw Error("expectation " + key + " must be true or false, got '" + v + "'");
}

void expect_bool(Record& rec, const std::map<std::string, std::string>& expect, const std::string& key) {
  auto it = expect.find(key);
  if (it == expect.end()) return;
  rec.set("expected", parse_bool(key, it->second));
  rec.agree_if_equal();
}

void check_expect_keys(const std::map<std::string, std::string>& expect) {
  static const std::vector<std::string> known{"mftp2", "mftp3", "doubly_real", "real", "profile"};
  for (const auto& [k, v] : expect) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw Error("unknown expectation '" + k + "'");
  }
}

std::string tuple_name(const std::string& prefix, const std::vector<std::size_t>& t) {
  std::string s = prefix + "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

nlohmann::ordered_json input_echo(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  if (cfg.family) {
    j["family"] = std::string(zoo::family_name(cfg.family->family));
    j["params"] = cfg.family->params;
  }
  if (!cfg.group_file.empty()) j["group_file"] = cfg.group_file;
  if (!cfg.table_file.empty()) j["table_file"] = cfg.table_file;
  if (cfg.command != "build" && cfg.command != "chartab") j["d"] = cfg.d;
  if (!cfg.subgroup.empty()) j["subgroup"] = cfg.subgroup;
  if (!cfg.subgroup_gens.empty()) j["subgroup_gens"] = cfg.subgroup_gens;
  if (!cfg.irreps.empty()) j["irreps"] = cfg.irreps;
  if (!cfg.formulas.empty()) j["formulas"] = cfg.formulas;
  if (cfg.command == "scan") j["battery"] = cfg.battery;
  return j;
}

Report new_report(const RunConfig& cfg) {
  Report r;
  r.version = KRONHECKE_VERSION;
  r.input = input_echo(cfg);
  r.with_timings = cfg.timings;
  return r;
}

const CharacterTable& table_of(const Subject& s) { return *s.table; }

}  // namespace

const OrbitPartition* OracleCache::get(const GroupTable& g, std::uint32_t d, std::uint64_t cap) {
  auto it = done_.find(d);
  if (it == done_.end()) {
    std::optional<OrbitPartition> p;
    try {
      p = simultaneous_classes(g, d, cap);
    } catch (const CapExceeded&) {
    }
    it = done_.emplace(d, std::move(p)).first;
  }
  return it->second ? &*it->second : nullptr;
}

Subject load_subject(const RunConfig& cfg, Report* timing) {
  Subject s;
  auto t0 = Clock::now();
  if (!cfg.table_file.empty()) {
    std::ifstream in(cfg.table_file);
    if (!in) throw Error("cannot open table file '" + cfg.table_file + "'");
    s.label = "table:" + cfg.table_file;
    s.table = std::make_shared<const CharacterTable>(read_table(in));
    if (timing) timing->timings.emplace_back("import", ms_since(t0));
  } else {
    if (cfg.family) {
      s.family = cfg.family;
      s.label = cfg.family->describe();
      s.group = std::make_shared<const GroupTable>(zoo::zoo_build(*cfg.family, cfg.order_cap));
    } else if (!cfg.group_file.empty()) {
      std::ifstream in(cfg.group_file);
      if (!in) throw Error("cannot open group file '" + cfg.group_file + "'");
      s.label = "file:" + cfg.group_file;
      auto g = read_group(in);
      if (g.order() > cfg.order_cap) throw CapExceeded("group too large: order above cap");
      s.group = std::make_shared<const GroupTable>(std::move(g));
    } else {
      throw Error("no group given: use --family, --group-file or --table-file");
    }
    if (timing) timing->timings.emplace_back("build", ms_since(t0));
    t0 = Clock::now();
    s.table = std::make_shared<const CharacterTable>(character_table(*s.group));
    if (timing) timing->timings.emplace_back("chartab", ms_since(t0));
  }
  if (s.table->class_count() <= kKappaClassCap) {
    t0 = Clock::now();
    s.tensor = std::make_shared<const FusionTensor>(*s.table);
    if (timing) timing->timings.emplace_back("fusion", ms_since(t0));
  }
  return s;
}

std::optional<SubgroupContext> resolve_subgroup(const Subject& s, const std::string& preset,
                                                const std::vector<Element>& gens) {
  if (preset.empty() && gens.empty()) return std::nullopt;
  if (!s.group) throw Error("subgroup checks need a group, not only a table");
  const GroupTable& g = *s.group;
  SubgroupContext ctx;
  ctx.ambient = s.group;
  ctx.table = s.table;
  if (!gens.empty()) {
    for (Element x : gens) {
      if (x >= g.order()) throw GroupError("subgroup generator out of range");
    }
    ctx.name = "gens";
    ctx.k = subgroup_closure(g, gens);
    return ctx;
  }
  ctx.name = preset;
  if (preset == "trivial") {
    ctx.k = make_subgroup(g, {0});
  } else if (preset == "whole") {
    std::vector<Element> all(g.order());
    std::iota(all.begin(), all.end(), 0u);
    ctx.k = make_subgroup(g, std::move(all));
  } else if (preset == "center") {
    ctx.k = make_subgroup(g, g.center());
  } else if (preset == "point_stabilizer") {
    if (!s.family || (s.family->family != zoo::Family::symmetric && s.family->family != zoo::Family::alternating)) {
      throw Error("point_stabilizer needs a symmetric or alternating family");
    }
    const auto n = static_cast<std::size_t>(s.family->params.at(0));
    ctx.k = make_subgroup(g, zoo::point_stabilizer(s.family->family == zoo::Family::symmetric
                                                       ? zoo::symmetric_elements(n)
                                                       : zoo::alternating_elements(n))
                                 .elements);
  } else if (preset == "borel") {
    if (!s.family || s.family->family != zoo::Family::gl2) throw Error("borel needs the gl2 family");
    ctx.k = make_subgroup(g, zoo::borel_subgroup(static_cast<std::uint32_t>(s.family->params.at(0))).elements);
  } else if (preset == "diagonal") {
    auto emb = diagonal_subgroup(g, 1);
    ctx.ambient = std::make_shared<const GroupTable>(std::move(emb.power));
    ctx.table = std::make_shared<const CharacterTable>(character_table(*ctx.ambient));
    ctx.k = std::move(emb.diagonal);
  } else {
    throw Error("unknown subgroup preset '" + preset + "'");
  }
  return ctx;
}

void verify_records(const Subject& s, const RunConfig& cfg, std::vector<Record>& out) {
  const CharacterTable& t = table_of(s);
  const std::string& L = s.label;
  const std::size_t first = out.size();

  {
    Record r = record(L, "table.classes");
    r.set("irreps", big(t.irrep_count()));
    r.set("classes", big(t.class_count()));
    r.agree_if_equal();
    out.push_back(std::move(r));
  }
  {
    Record r = record(L, "table.degrees");
    BigInt sum = 0;
    for (const auto& ch : t.irreps()) sum += big(ch.degree) * big(ch.degree);
    r.set("sum_deg_sq", sum);
    r.set("order", t.order());
    r.agree_if_equal();
    out.push_back(std::move(r));
  }
  {
    Record r = record(L, "sqrt_counts");
    BigInt sum = 0;
    for (std::size_t c = 0; c < t.class_count(); ++c) sum += t.class_sizes()[c] * t.indicators().r[c];
    r.set("weighted_r", sum);
    r.set("order", t.order());
    r.agree_if_equal();
    r.notes.push_back("r_max=" + to_decimal(t.indicators().r_max));
    out.push_back(std::move(r));
  }
  {
    Record r = record(L, "self_dual");
    std::uint64_t self_dual = 0, real_classes = 0;
    for (int x : t.indicators().sigma) self_dual += x != 0;
    for (std::size_t c = 0; c < t.class_count(); ++c) real_classes += t.inverse_class()[c] == c;
    r.set("self_dual_irreps", big(self_dual));
    r.set("real_classes", big(real_classes));
    r.agree_if_equal();
    out.push_back(std::move(r));
  }

  const bool kappa = s.tensor != nullptr;
  for (std::uint32_t d : cfg.d) {
    if (d == 0) throw Error("d must be positive");
    CountReport c = conj_count(t, d, kappa, s.tensor.get());
    CountReport rc = rconj_count(t, d, kappa, s.tensor.get());
    if (!kappa) {
      c.notes = {"kappa_sq skipped: cap"};
      rc.notes = {"sigma_weighted skipped: cap"};
    }
    if (d == 1) c.add("classes", big(t.class_count()));
    if (s.group) {
      if (const OrbitPartition* p = s.oracles->get(*s.group, d, cfg.orbit_cap)) {
        c.add("oracle", big(p->orbit_count));
        rc.add("oracle", big(p->real_orbit_count));
      } else {
        c.notes.push_back("oracle skipped: cap");
        rc.notes.push_back("oracle skipped: cap");
      }
    } else {
      c.notes.push_back("oracle skipped: no group");
      rc.notes.push_back("oracle skipped: no group");
    }
    out.push_back(from_count(L, c));
    out.push_back(from_count(L, rc));
  }

  if (auto ctx = resolve_subgroup(s, cfg.subgroup, cfg.subgroup_gens)) {
    const std::string G = L + "/" + ctx->name;
    const GroupTable& amb = *ctx->ambient;
    const auto dc = double_cosets(amb, ctx->k);

    CountReport frame = frame_verify(*ctx->table, ctx->k);
    frame.add("self_inverse", big(dc.self_inverse_count));
    frame.add("frame_pairs", big(frame_pair_count(amb, ctx->k)));
    out.push_back(from_count(G, frame));

    CountReport hecke = hecke_dim_verify(*ctx->table, ctx->k);
    hecke.add("double_cosets", big(dc.cosets.size()));
    out.push_back(from_count(G, hecke));

    const GelfandCheck gc = easy_gelfand_verify(*ctx->table, ctx->k, dc.self_inverse_count == dc.cosets.size());
    Record r = record(G, "easy_gelfand");
    r.set("symmetric", gc.symmetric);
    r.set("character_side", gc.character_side);
    r.agree = gc.holds;
    out.push_back(std::move(r));
  }

  if (!cfg.formulas.empty()) {
    std::vector<Record> kept(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(first));
    for (auto it = out.begin() + static_cast<std::ptrdiff_t>(first); it != out.end(); ++it) {
      Record r = *it;
      std::erase_if(r.values, [&](const auto& kv) {
        return std::find(cfg.formulas.begin(), cfg.formulas.end(), kv.first) == cfg.formulas.end();
      });
      if (r.values.empty()) continue;
      if (r.name.rfind("conj_d", 0) == 0 || r.name.rfind("rconj_d", 0) == 0 || r.name.rfind("frame", 0) == 0 ||
          r.name.rfind("hecke_dim", 0) == 0 || r.name.rfind("table.", 0) == 0 || r.name == "sqrt_counts" ||
          r.name == "self_dual") {
        r.agree_if_equal();
      }
      kept.push_back(std::move(r));
    }
    out = std::move(kept);
  }
}

void classify_records(const Subject& s, const RunConfig& cfg, std::vector<Record>& out) {
  check_expect_keys(cfg.expect);
  const CharacterTable& t = table_of(s);
  const std::string& L = s.label;

  bool real = true;
  for (std::size_t c = 0; c < t.class_count(); ++c) real = real && t.inverse_class()[c] == c;
  {
    Record r = record(L, "real");
    r.set("inverse_class", real);
    expect_bool(r, cfg.expect, "real");
    out.push_back(std::move(r));
  }
  if (!s.tensor) {
    Record r = record(L, "mftp_2");
    r.notes.push_back("kappa checks skipped: cap");
    r.agree = true;
    out.push_back(std::move(r));
    return;
  }
  const FusionTensor* n = s.tensor.get();

  std::map<std::uint32_t, TupleCheck> mftp;
  for (std::uint32_t d : {2u, 3u}) {
    mftp[d] = is_mftp(t, d, n);
    Record r = record(L, "mftp_" + std::to_string(d));
    r.set("kappa", mftp[d].holds);
    if (mftp[d].witness) r.witness = witness_json(t, *mftp[d].witness, mftp[d].reason);
    expect_bool(r, cfg.expect, "mftp" + std::to_string(d));
    out.push_back(std::move(r));
  }

  bool doubly_real = false;
  for (std::uint32_t d : {1u, 2u, 3u}) {
    const TupleCheck c = is_d_real_char(t, d, n);
    Record r = record(L, d == 2 ? std::string("doubly_real") : "d_real_" + std::to_string(d));
    r.set("character", c.holds);
    if (d <= 2) {
      if (!s.group) {
        r.notes.push_back("oracle skipped: no group");
      } else if (const OrbitPartition* p = s.oracles->get(*s.group, d, cfg.orbit_cap)) {
        r.set("oracle", p->real_orbit_count == p->orbit_count);
      } else {
        r.notes.push_back("oracle skipped: cap");
      }
    }
    if (c.witness) r.witness = witness_json(t, *c.witness, c.reason);
    r.agree_if_equal();
    if (d == 2) {
      const std::string* oracle = r.get("oracle");
      doubly_real = oracle ? *oracle == "1" : c.holds;
      expect_bool(r, cfg.expect, "doubly_real");
    }
    out.push_back(std::move(r));
  }
  {
    Record r = record(L, "real_mftp2_law");
    r.set("real_and_mftp2", real && mftp[2].holds);
    r.set("doubly_real", doubly_real);
    r.agree_if_equal();
    out.push_back(std::move(r));
  }
  {
    Record r = record(L, "doubly_real_implies_mftp2");
    const bool holds = !doubly_real || mftp[2].holds;
    r.set("implication", holds);
    r.agree = holds;
    out.push_back(std::move(r));
  }
  {
    const CombinatorialProfile p = combinatorial_profile(t, n);
    Record r = record(L, "profile");
    r.set("matched", p.matched);
    if (p.matched) {
      r.set("z", big(p.z));
      r.set("a", big(p.a));
      r.set("q", big(p.q));
    }
    r.agree = true;
    if (auto it = cfg.expect.find("profile"); it != cfg.expect.end()) {
      const std::string got =
          p.matched ? std::to_string(p.z) + "/" + std::to_string(p.a) + "/" + std::to_string(p.q) : "none";
      r.agree = got == it->second;
      r.notes.push_back("expected " + it->second);
    }
    out.push_back(std::move(r));
  }
  {
    const SignLawReport sl = sign_law_check(t, n);
    Record r = record(L, "sign_law");
    r.set("triples", big(sl.triples));
    r.set("violations", big(sl.violations.size()));
    r.agree = sl.violations.empty();
    if (!sl.violations.empty()) r.witness = witness_json(t, KroneckerResult{sl.violations.front(), 1}, "sign law");
    out.push_back(std::move(r));
  }
  if (auto w = higher_hecke_witness(t)) {
    Record r = record(L, "higher_hecke");
    r.set("kappa", w->value);
    r.agree = w->value >= 2;
    r.witness = witness_json(t, *w, "");
    out.push_back(std::move(r));
  }
}

int exit_code_for(const Report& r) {
  if (!r.all_agree()) {
    const bool disagreement = std::any_of(r.records.begin(), r.records.end(),
                                          [](const Record& rec) { return !rec.agree && rec.name != "error"; });
    if (disagreement) return 2;
  }
  return r.error ? 1 : 0;
}

Outcome cmd_build(const RunConfig& cfg) {
  Outcome o;
  o.report = new_report(cfg);
  Subject s;
  if (cfg.family) {
    s.label = cfg.family->describe();
    s.group = std::make_shared<const GroupTable>(zoo::zoo_build(*cfg.family, cfg.order_cap));
  } else if (!cfg.group_file.empty()) {
    std::ifstream in(cfg.group_file);
    if (!in) throw Error("cannot open group file '" + cfg.group_file + "'");
    s.label = "file:" + cfg.group_file;
    s.group = std::make_shared<const GroupTable>(read_group(in));
  } else {
    throw Error("build needs --family or --group-file");
  }
  if (cfg.format == Format::text) {
    o.raw = group_to_string(*s.group);
    return o;
  }
  const GroupTable& g = *s.group;
  const ConjugacyData cd = conjugacy_data(g);
  Record r = record(s.label, "group");
  r.set("order", big(g.order()));
  r.set("classes", big(cd.class_count()));
  r.set("exponent", big(g.exponent()));
  r.set("center", big(g.center().size()));
  r.set("abelian", g.is_abelian());
  r.agree = true;
  o.report.records.push_back(std::move(r));
  return o;
}

Outcome cmd_chartab(const RunConfig& cfg) {
  Outcome o;
  o.report = new_report(cfg);
  const Subject s = load_subject(cfg, &o.report);
  const CharacterTable& t = *s.table;
  if (cfg.format == Format::text) {
    o.raw = table_to_string(t);
    return o;
  }
  if (cfg.format == Format::csv) {
    std::ostringstream out;
    out << "irrep,degree,sigma,class,value\n";
    for (std::size_t i = 0; i < t.irrep_count(); ++i) {
      for (std::size_t c = 0; c < t.class_count(); ++c) {
        out << i << ',' << t.irrep(i).degree << ',' << t.indicators().sigma[i] << ',' << c << ','
            << t.irrep(i).values[c].serialize() << "\n";
      }
    }
    o.raw = out.str();
    return o;
  }
  nlohmann::ordered_json j;
  j["version"] = o.report.version;
  j["input"] = o.report.input;
  nlohmann::ordered_json tj;
  tj["order"] = to_decimal(t.order());
  tj["exponent"] = to_decimal(t.exponent());
  tj["classes"] = t.class_count();
  std::vector<std::string> sizes, r;
  for (const auto& x : t.class_sizes()) sizes.push_back(to_decimal(x));
  for (const auto& x : t.indicators().r) r.push_back(to_decimal(x));
  tj["sizes"] = sizes;
  tj["powermap2"] = t.power2();
  tj["inverse_class"] = t.inverse_class();
  tj["sqrt_counts"] = r;
  tj["r_max"] = to_decimal(t.indicators().r_max);
  tj["irreps"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.irrep_count(); ++i) {
    nlohmann::ordered_json ij;
    ij["degree"] = t.irrep(i).degree;
    ij["sigma"] = t.indicators().sigma[i];
    ij["values"] = t.irrep(i).serialized_values();
    tj["irreps"].push_back(std::move(ij));
  }
  j["table"] = std::move(tj);
  if (cfg.timings) {
    nlohmann::ordered_json tm = nlohmann::ordered_json::object();
    for (const auto& [phase, ms] : o.report.timings) tm[phase] = ms;
    j["timings_ms"] = tm;
  }
  o.raw = j.dump(2) + "\n";
  return o;
}

Outcome cmd_kron(const RunConfig& cfg) {
  Outcome o;
  o.report = new_report(cfg);
  const Subject s = load_subject(cfg, &o.report);
  const CharacterTable& t = *s.table;
  auto emit = [&](const std::vector<std::size_t>& tuple) {
    Record r = record(s.label, tuple_name("kappa", tuple));
    r.set("classwise", kronecker(t, tuple).value);
    if (s.tensor) r.set("tensor", big(s.tensor->contract(tuple)));
    r.agree_if_equal();
    o.report.records.push_back(std::move(r));
  };
  if (!cfg.irreps.empty()) {
    if (cfg.irreps.size() < 2) throw Error("--irreps needs at least two indices");
    emit(cfg.irreps);
  } else {
    const std::size_t k = t.irrep_count();
    for (std::uint32_t d : cfg.d) {
      if (d == 0 || d > kMaxKappaArity) throw Error("kron enumerates d in 1..3");
      std::vector<std::size_t> tuple(d + 1, 0);
      while (true) {
        emit(tuple);
        std::size_t i = d + 1;
        while (i-- > 0 && tuple[i] == k - 1) {
        }
        if (i == static_cast<std::size_t>(-1)) break;
        ++tuple[i];
        for (std::size_t j = i + 1; j <= d; ++j) tuple[j] = tuple[i];
      }
    }
  }
  o.exit_code = exit_code_for(o.report);
  return o;
}

Outcome cmd_verify(const RunConfig& cfg) {
  Outcome o;
  o.report = new_report(cfg);
  const Subject s = load_subject(cfg, &o.report);
  const auto t0 = Clock::now();
  verify_records(s, cfg, o.report.records);
  o.report.timings.emplace_back("verify", ms_since(t0));
  o.exit_code = exit_code_for(o.report);
  return o;
}

Outcome cmd_classify(const RunConfig& cfg) {
  Outcome o;
  o.report = new_report(cfg);
  const Subject s = load_subject(cfg, &o.report);
  const auto t0 = Clock::now();
  classify_records(s, cfg, o.report.records);
  o.report.timings.emplace_back("classify", ms_since(t0));
  o.exit_code = exit_code_for(o.report);
  return o;
}

Outcome cmd_scan(const RunConfig& cfg) {
  if (cfg.battery.empty()) throw Error("scan needs --battery");
  const auto entries = load_battery(cfg.battery);
  Outcome o;
  o.report = new_report(cfg);

  struct Result {
    std::vector<Record> records;
    bool error = false;
    double ms = 0;
  };
  std::vector<Result> results(entries.size());
  auto run_entry = [&](std::size_t i) {
    const BatteryEntry& e = entries[i];
    RunConfig c = cfg;
    c.family = e.family;
    c.group_file = e.group_file;
    c.table_file.clear();
    c.subgroup = e.subgroup;
    c.subgroup_gens.clear();
    c.expect = e.expect;
    const auto t0 = Clock::now();
    try {
      Subject s = load_subject(c);
      s.label = e.label();
      verify_records(s, c, results[i].records);
      classify_records(s, c, results[i].records);
    } catch (const std::exception& ex) {
      results[i].records.clear();
      Record r = record(e.label(), "error");
      r.agree = false;
      r.notes.push_back(std::string("line ") + std::to_string(e.line) + ": " + ex.what());
      results[i].records.push_back(std::move(r));
      results[i].error = true;
    }
    results[i].ms = ms_since(t0);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(entries.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) run_entry(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) run_entry(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (auto& r : results[i].records) o.report.records.push_back(std::move(r));
    o.report.error = o.report.error || results[i].error;
    o.report.timings.emplace_back(entries[i].label(), results[i].ms);
  }
  o.exit_code = exit_code_for(o.report);
  return o;
}

Outcome run(const RunConfig& cfg) {
  if (cfg.command == "build") return cmd_build(cfg);
  if (cfg.command == "chartab") return cmd_chartab(cfg);
  if (cfg.command == "kron") return cmd_kron(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "scan") return cmd_scan(cfg);
  throw Error("unknown command '" + cfg.command + "'");
}

}  // namespace kronhecke::cli
