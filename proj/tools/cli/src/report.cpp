#include "kronhecke/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "kronhecke/error.hpp"

namespace kronhecke::cli {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw Error("unknown format '" + name + "'");
}

void Record::set(const std::string& formula, const BigInt& v) {
  for (auto& [f, value] : values) {
    if (f == formula) {
      value = to_decimal(v);
      return;
    }
  }
  values.emplace_back(formula, to_decimal(v));
}

const std::string* Record::get(const std::string& formula) const {
  for (const auto& [f, value] : values) {
    if (f == formula) return &value;
  }
  return nullptr;
}

void Record::agree_if_equal() {
  agree = !values.empty() && std::all_of(values.begin(), values.end(),
                                         [&](const auto& kv) { return kv.second == values.front().second; });
}

Record from_count(const std::string& group, const CountReport& r) {
  Record rec;
  rec.group = group;
  rec.name = r.d ? r.quantity + "=" + std::to_string(r.d) : r.quantity;
  for (const auto& [f, v] : r.values) rec.set(f, v);
  rec.agree = r.agree();
  rec.notes = r.notes;
  return rec;
}

nlohmann::ordered_json witness_json(const CharacterTable& t, const KroneckerResult& w, const std::string& reason) {
  nlohmann::ordered_json j;
  j["irreps"] = nlohmann::ordered_json::array();
  for (auto i : w.irreps) {
    nlohmann::ordered_json irrep;
    irrep["index"] = i;
    irrep["degree"] = t.irrep(i).degree;
    irrep["values"] = t.irrep(i).serialized_values();
    j["irreps"].push_back(std::move(irrep));
  }
  j["kappa"] = to_decimal(w.value);
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

bool Report::all_agree() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.agree; });
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["input"] = r.input;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    nlohmann::ordered_json o;
    if (!rec.group.empty()) o["group"] = rec.group;
    o["name"] = rec.name;
    o["values"] = nlohmann::ordered_json::object();
    for (const auto& [f, v] : rec.values) o["values"][f] = v;
    o["agree"] = rec.agree;
    o["witness"] = rec.witness;
    if (!rec.notes.empty()) o["notes"] = rec.notes;
    j["records"].push_back(std::move(o));
  }
  if (r.with_timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [phase, ms] : r.timings) t[phase] = ms;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

// One row per (group, check); several formulas are joined with ';' in report order.
std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "group,check,formula,value,agree\n";
  for (const auto& rec : r.records) {
    std::string formulas, values;
    for (std::size_t i = 0; i < rec.values.size(); ++i) {
      formulas += (i ? ";" : "") + rec.values[i].first;
      values += (i ? ";" : "") + rec.values[i].second;
    }
    out << csv_cell(rec.group) << ',' << csv_cell(rec.name) << ',' << csv_cell(formulas) << ','
        << csv_cell(values) << ',' << (rec.agree ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    if (!rec.group.empty()) out << rec.group << "  ";
    out << rec.name << ":";
    for (const auto& [f, v] : rec.values) out << ' ' << f << '=' << v;
    out << (rec.agree ? "  [agree]" : "  [DISAGREE]") << "\n";
    if (!rec.witness.is_null()) {
      out << "    witness kappa=" << rec.witness["kappa"].get<std::string>() << " irreps=(";
      bool first = true;
      for (const auto& i : rec.witness["irreps"]) {
        out << (first ? "" : ",") << i["index"].get<std::size_t>() << ":deg" << i["degree"].get<std::uint64_t>();
        first = false;
      }
      out << ")";
      if (rec.witness.contains("reason")) out << ' ' << rec.witness["reason"].get<std::string>();
      out << "\n";
    }
    for (const auto& n : rec.notes) out << "    note: " << n << "\n";
  }
  if (r.with_timings) {
    for (const auto& [phase, ms] : r.timings) out << "time " << phase << ": " << ms << " ms\n";
  }
  return out.str();
}

}  // namespace

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::json:
      return render_json(r);
    case Format::csv:
      return render_csv(r);
    case Format::text:
      return render_text(r);
  }
  return {};
}

}  // namespace kronhecke::cli
