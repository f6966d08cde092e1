#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "kronhecke/character_table.hpp"
#include "kronhecke/error.hpp"

namespace kronhecke {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) return true;
  }
  return false;
}

// "key rest..." -> rest, with the key checked.
std::string expect_key(std::istream& in, const std::string& key) {
  std::string line;
  if (!next_line(in, line)) throw FormatError("format error: missing '" + key + "' line");
  if (line.compare(0, key.size(), key) != 0 || (line.size() > key.size() && line[key.size()] != ' ')) {
    throw FormatError("format error: expected '" + key + "', got '" + line + "'");
  }
  return line.size() > key.size() ? line.substr(key.size() + 1) : std::string{};
}

BigInt parse_big(const std::string& tok) {
  BigInt v;
  if (tok.empty() || v.set_str(tok, 10) != 0) throw FormatError("format error: bad integer '" + tok + "'");
  return v;
}

}  // namespace

void write_table(std::ostream& out, const CharacterTable& t) {
  out << "order " << to_decimal(t.order()) << "\n";
  out << "exponent " << t.exponent() << "\n";
  out << "classes " << t.class_count() << "\n";
  out << "sizes";
  for (const auto& s : t.class_sizes()) out << ' ' << to_decimal(s);
  out << "\npowermap2";
  for (auto c : t.power2()) out << ' ' << c;
  out << "\n";
  for (const auto& ch : t.irreps()) {
    out << "chi:";
    for (std::size_t c = 0; c < ch.values.size(); ++c) out << (c ? " | " : " ") << ch.values[c].serialize();
    out << "\n";
  }
}

CharacterTable read_table(std::istream& in) {
  const BigInt order = parse_big(trim(expect_key(in, "order")));
  if (order <= 0) throw FormatError("format error: order must be positive");
  const BigInt exponent = parse_big(trim(expect_key(in, "exponent")));
  if (exponent <= 0) throw FormatError("format error: bad exponent");
  const BigInt classes = parse_big(trim(expect_key(in, "classes")));
  if (classes <= 0 || !classes.fits_ulong_p()) throw FormatError("format error: bad class count");
  const std::size_t k = classes.get_ui();

  std::vector<BigInt> sizes;
  {
    std::istringstream ss(expect_key(in, "sizes"));
    std::string tok;
    while (ss >> tok) sizes.push_back(parse_big(tok));
  }
  if (sizes.size() != k) throw FormatError("format error: expected " + std::to_string(k) + " class sizes");
  std::vector<std::size_t> power2;
  {
    std::istringstream ss(expect_key(in, "powermap2"));
    std::string tok;
    while (ss >> tok) {
      const BigInt v = parse_big(tok);
      if (v < 0 || v >= classes) throw FormatError("format error: powermap2 index out of range");
      power2.push_back(v.get_ui());
    }
  }
  if (power2.size() != k) throw FormatError("format error: expected " + std::to_string(k) + " powermap2 entries");
  if (sizes[0] != 1 || power2[0] != 0) throw FormatError("format error: class 0 must be the identity class");

  std::vector<Character> irreps;
  std::string line;
  while (next_line(in, line)) {
    if (line.compare(0, 4, "chi:") != 0) throw FormatError("format error: expected 'chi:' line");
    Character ch;
    std::string rest = line.substr(4);
    std::size_t pos = 0;
    while (true) {
      const auto bar = rest.find('|', pos);
      const std::string cell = trim(rest.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
      try {
        ch.values.push_back(Cyclotomic::parse(cell));
      } catch (const FormatError&) {
        throw;
      } catch (const Error& err) {
        throw FormatError(std::string("format error: ") + err.what());
      }
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    if (ch.values.size() != k) throw FormatError("format error: character has wrong number of values");
    const Cyclotomic& d = ch.values[0];
    if (!d.is_rational() || d.to_rational().get_den() != 1 || d.to_integer() <= 0 ||
        !d.to_integer().fits_ulong_p()) {
      throw FormatError("format error: value at the identity class must be a positive integer");
    }
    ch.degree = d.to_integer().get_ui();
    irreps.push_back(std::move(ch));
  }
  if (irreps.size() != k) throw FormatError("format error: expected " + std::to_string(k) + " characters");

  try {
    verify_row_orthogonality(order, sizes, irreps);
  } catch (const ComputationError&) {
    throw ComputationError("orthogonality failed on import");
  }
  return CharacterTable(order, exponent, std::move(sizes), std::move(power2), std::move(irreps));
}

std::string table_to_string(const CharacterTable& t) {
  std::ostringstream out;
  write_table(out, t);
  return out.str();
}

CharacterTable table_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

}  // namespace kronhecke
