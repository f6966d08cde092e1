#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "kronhecke/character_table.hpp"
#include "kronhecke/error.hpp"
#include "oracles.hpp"

using namespace kronhecke;
using zoo::cyclic_group;

namespace {

std::vector<std::uint64_t> degrees(const CharacterTable& t) {
  std::vector<std::uint64_t> d;
  for (const auto& ch : t.irreps()) d.push_back(ch.degree);
  return d;
}

std::vector<Cyclotomic> ints(std::initializer_list<int> v, std::uint64_t e) {
  std::vector<Cyclotomic> out;
  for (int x : v) out.emplace_back(x, e);
  return out;
}

const Character* find_degree(const CharacterTable& t, std::uint64_t d) {
  for (const auto& ch : t.irreps())
    if (ch.degree == d) return &ch;
  return nullptr;
}

std::size_t index_of_degree(const CharacterTable& t, std::uint64_t d) {
  for (std::size_t i = 0; i < t.irrep_count(); ++i)
    if (t.irrep(i).degree == d) return i;
  return t.irrep_count();
}

CharacterTable load(const std::string& name) {
  std::ifstream in(std::string(KRONHECKE_TEST_DATA) + "/golden/" + name);
  REQUIRE(in.good());
  return read_table(in);
}

std::vector<std::pair<std::string, std::string>> groups() {
  return {{"cyclic", "1"},       {"cyclic", "2"},        {"abelian", "2,6"},
          {"symmetric", "3"},    {"symmetric", "4"},     {"symmetric", "5"},
          {"alternating", "4"},  {"alternating", "5"},   {"generalized_quaternion", "6"},
          {"generalized_dihedral", "2,4"}, {"heisenberg", "1,3"}, {"heisenberg_odd_p3", "3,1"},
          {"extraspecial2", "1,1"}, {"gl2", "3"},        {"psl2", "7"},
          {"frobenius", "13,1,3"}, {"frobenius", "11,1,5"}};
}

}  // namespace

TEST_CASE("S3 table") {
  const auto t = character_table(oracle::build("symmetric", "3"));
  CHECK(degrees(t) == std::vector<std::uint64_t>{1, 1, 2});
  // classes come out as identity, transpositions, 3-cycles
  CHECK(t.class_sizes() == std::vector<BigInt>{1, 3, 2});
  const Character* std2 = find_degree(t, 2);
  REQUIRE(std2);
  CHECK(std2->values == ints({2, 0, -1}, 6));
}

TEST_CASE("Q8 degrees") {
  CHECK(degrees(character_table(oracle::build("generalized_quaternion", "4"))) ==
        std::vector<std::uint64_t>{1, 1, 1, 1, 2});
}

TEST_CASE("C2 table") {
  const auto t = character_table(cyclic_group(2));
  REQUIRE(t.irrep_count() == 2);
  std::vector<std::vector<Cyclotomic>> rows{t.irrep(0).values, t.irrep(1).values};
  std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return a[1].serialize() < b[1].serialize(); });
  CHECK(rows[0] == ints({1, -1}, 2));
  CHECK(rows[1] == ints({1, 1}, 2));
}

TEST_CASE("trivial group") {
  const auto t = character_table(GroupTable());
  CHECK(t.irrep_count() == 1);
  CHECK(t.indicators().sigma == std::vector<int>{1});
}

TEST_CASE("Q8 indicators") {
  const auto g = oracle::build("generalized_quaternion", "4");
  const auto t = character_table(g);
  CHECK(t.indicators().sigma[index_of_degree(t, 2)] == -1);
  const Element minus_one = g.center().at(1);
  CHECK(t.indicators().r[t.conjugacy()->class_of[minus_one]] == 6);
  CHECK(t.indicators().r_max == 6);
}

TEST_CASE("S3 indicators") {
  const auto t = character_table(oracle::build("symmetric", "3"));
  CHECK(t.indicators().sigma == std::vector<int>{1, 1, 1});
  CHECK(t.indicators().r == std::vector<BigInt>{4, 0, 1});
}

TEST_CASE("dim_fixed_space") {
  const auto s4 = oracle::build("symmetric", "4");
  const auto t = character_table(s4);
  const auto trivial = make_subgroup(s4, {0});
  std::vector<Element> all(24);
  std::iota(all.begin(), all.end(), 0u);
  const auto whole = make_subgroup(s4, all);
  for (std::size_t i = 0; i < t.irrep_count(); ++i) {
    CHECK(dim_fixed_space(t, i, trivial) == t.irrep(i).degree);
    CHECK(dim_fixed_space(t, i, whole) == (i == t.trivial_index() ? 1u : 0u));
  }
  const auto k = make_subgroup(s4, zoo::point_stabilizer(zoo::symmetric_elements(4)).elements);
  // standard irrep: the degree-3 character with value 1 on transpositions
  std::size_t standard = t.irrep_count();
  for (std::size_t i = 0; i < t.irrep_count(); ++i) {
    if (t.irrep(i).degree == 3 && t.irrep(i).values[1] == Cyclotomic(1, 12)) standard = i;
  }
  REQUIRE(standard < t.irrep_count());
  CHECK(dim_fixed_space(t, standard, k) == 1);
}

TEST_CASE("dim_fixed_space needs a group") {
  const auto t = load("s3.tbl");
  CHECK_THROWS_AS(dim_fixed_space(t, 0, SubgroupSpec{{0}}), Error);
}

TEST_CASE("exchange format round trip") {
  const auto t = character_table(oracle::build("symmetric", "3"));
  const auto text = table_to_string(t);
  const auto back = table_from_string(text);
  CHECK(back == t);
  CHECK(table_to_string(back) == text);
}

TEST_CASE("corrupted table value fails orthogonality") {
  auto text = table_to_string(character_table(oracle::build("symmetric", "3")));
  const auto pos = text.rfind("6:[0=-1/1]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 10, "6:[0=-2/1]");
  CHECK_THROWS_WITH_AS(table_from_string(text), "orthogonality failed on import", ComputationError);
}

TEST_CASE("malformed tables are format errors") {
  CHECK_THROWS_AS(table_from_string(""), FormatError);
  CHECK_THROWS_AS(table_from_string("order 2\nexponent 2\nclasses 2\nsizes 1 1\npowermap2 0 0\nchi: 2:[0=1/1]\n"),
                  FormatError);
  CHECK_THROWS_AS(table_from_string("order 2\nexponent 2\nclasses 2\nsizes 2 1\npowermap2 0 0\n"
                                    "chi: 2:[0=1/1] | 2:[0=1/1]\nchi: 2:[0=1/1] | 2:[0=-1/1]\n"),
                  FormatError);
}

TEST_CASE("an external PSL2(7) table matches the computed one up to ordering") {
  const auto ext = load("psl2_7_external.tbl");
  const auto own = character_table(oracle::build("psl2", "7"));
  REQUIRE(ext.class_count() == own.class_count());
  const std::size_t k = own.class_count();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  bool matched = false;
  std::vector<std::string> own_rows;
  for (const auto& ch : own.irreps()) {
    std::string s;
    for (const auto& v : ch.values) s += v.serialize() + "|";
    own_rows.push_back(s);
  }
  std::sort(own_rows.begin(), own_rows.end());
  do {
    // perm maps own class c -> external class perm[c]
    bool ok = perm[0] == 0;
    for (std::size_t c = 0; c < k && ok; ++c) {
      ok = ext.class_sizes()[perm[c]] == own.class_sizes()[c] && ext.power2()[perm[c]] == perm[own.power2()[c]];
    }
    if (!ok) continue;
    std::vector<std::string> rows;
    for (const auto& ch : ext.irreps()) {
      std::string s;
      for (std::size_t c = 0; c < k; ++c) s += ch.values[perm[c]].serialize() + "|";
      rows.push_back(s);
    }
    std::sort(rows.begin(), rows.end());
    matched = matched || rows == own_rows;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(matched);
}

TEST_CASE("dixon prime") {
  for (auto [e, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{6, 6}, {60, 120}, {84, 168}, {1, 1}}) {
    const auto p = dixon_prime(e, n);
    CHECK(is_prime(p));
    CHECK(p % e == 1 % e);
    CHECK(p * p > 4 * n);
    for (std::uint64_t q = 2; q < p; ++q) CHECK_FALSE((is_prime(q) && q % e == 1 % e && q * q > 4 * n));
  }
}

TEST_CASE("property: table invariants against brute force") {
  for (const auto& [f, p] : groups()) {
    CAPTURE(f);
    CAPTURE(p);
    const auto g = oracle::build(f.c_str(), p.c_str());
    const auto t = character_table(g);
    const auto* cd = t.conjugacy();
    REQUIRE(cd);
    CHECK(t.irrep_count() == t.class_count());
    CHECK(t.class_count() == oracle::class_sizes(g).size());
    CHECK(t.exponent() == g.exponent());
    BigInt sum = 0;
    for (const auto& ch : t.irreps()) {
      sum += BigInt(static_cast<unsigned long>(ch.degree * ch.degree));
      CHECK(ch.values[0] == Cyclotomic(static_cast<std::int64_t>(ch.degree), g.exponent()));
      for (const auto& v : ch.values) CHECK(v.conductor() == g.exponent());
    }
    CHECK(sum == static_cast<unsigned long>(g.order()));
    CHECK_NOTHROW(t.verify_orthogonality(false));
    CHECK_NOTHROW(t.verify_orthogonality(true));
    // r(g) = #square roots, by brute force
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      CHECK(t.indicators().r[c] == static_cast<unsigned long>(oracle::square_roots(g, cd->reps[c])));
    }
    // sigma(V) = (1/|G|) sum_x chi(x^2), elementwise
    for (std::size_t i = 0; i < t.irrep_count(); ++i) {
      Cyclotomic s = Cyclotomic::zero(g.exponent());
      for (Element x = 0; x < g.order(); ++x) s += oracle::value_at(t, i, g.mul(x, x));
      const BigRational q = s.to_rational() / BigRational(static_cast<long>(g.order()));
      CHECK(q == t.indicators().sigma[i]);
    }
    // row order is canonical
    for (std::size_t i = 1; i < t.irrep_count(); ++i) {
      const auto& a = t.irrep(i - 1);
      const auto& b = t.irrep(i);
      CHECK((a.degree < b.degree || (a.degree == b.degree && a.serialized_values() < b.serialized_values())));
    }
    // duals and inverse classes
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      CHECK(t.inverse_class()[c] == cd->class_of[g.inv(cd->reps[c])]);
    }
    for (std::size_t i = 0; i < t.irrep_count(); ++i) {
      for (std::size_t c = 0; c < t.class_count(); ++c) {
        CHECK(t.irrep(t.dual(i)).values[c] == t.irrep(i).values[c].conjugate());
      }
    }
    CHECK(table_from_string(table_to_string(t)) == t);
  }
}

TEST_CASE("property: computing a table is deterministic") {
  const auto g = oracle::build("gl2", "3");
  CHECK(table_to_string(character_table(g)) == table_to_string(character_table(g)));
}
