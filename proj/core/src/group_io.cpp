#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "kronhecke/error.hpp"
#include "kronhecke/group_table.hpp"

namespace kronhecke {

namespace {

std::vector<Element> parse_row(const std::string& line, std::size_t n, std::size_t lineno) {
  std::vector<Element> row;
  row.reserve(n);
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    if (*p == ' ') {
      ++p;
      continue;
    }
    Element v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' '))
      throw FormatError("format error: bad integer on line " + std::to_string(lineno));
    row.push_back(v);
    p = next;
  }
  if (row.size() != n)
    throw FormatError("format error: line " + std::to_string(lineno) + " has " +
                      std::to_string(row.size()) + " entries, expected " + std::to_string(n));
  return row;
}

}  // namespace

void write_group(std::ostream& out, const GroupTable& g) {
  const std::size_t n = g.order();
  out << "order " << n << '\n';
  for (Element a = 0; a < n; ++a) {
    auto row = g.row(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << row[b];
    }
    out << '\n';
  }
  if (g.has_labels())
    for (const auto& l : g.labels()) out << "# " << l << '\n';
}

GroupTable read_group(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("format error: empty input");
  std::istringstream head(line);
  std::string kw;
  std::size_t n = 0;
  if (!(head >> kw >> n) || kw != "order" || n == 0)
    throw FormatError("format error: expected 'order n' on line 1");

  std::vector<std::vector<Element>> rows;
  std::vector<std::string> labels;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      labels.push_back(line.size() >= 2 && line[1] == ' ' ? line.substr(2) : line.substr(1));
      continue;
    }
    if (rows.size() == n) throw FormatError("format error: too many rows");
    rows.push_back(parse_row(line, n, lineno));
  }
  if (rows.size() != n) throw FormatError("format error: expected " + std::to_string(n) + " rows");
  if (!labels.empty() && labels.size() != n)
    throw FormatError("format error: expected " + std::to_string(n) + " label lines");
  return validate_cayley(rows, std::move(labels));
}

std::string group_to_string(const GroupTable& g) {
  std::ostringstream out;
  write_group(out, g);
  return out.str();
}

GroupTable group_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_group(in);
}

}  // namespace kronhecke
