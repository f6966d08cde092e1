#include <doctest.h>

#include <sstream>

#include "kronhecke/error.hpp"
#include "kronhecke/group_table.hpp"
#include "kronhecke/zoo.hpp"
#include "oracles.hpp"

using namespace kronhecke;
using zoo::cyclic_group;

namespace {

Permutation cycle(std::size_t degree, std::vector<std::uint32_t> points) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

// Left regular representation of Q8 on {1,i,j,k,-1,-i,-j,-k} = 0..7.
Permutation left_mult_q8(int unit) {
  // quaternion product of basis units with signs; unit 1 = i, 2 = j
  static const int table[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  Permutation p(8);
  for (int x = 0; x < 8; ++x) {
    int sign = x / 4, b = x % 4;
    int r = table[unit][b];
    int rs = (r / 4 + sign) % 2, rb = r % 4;
    p[x] = static_cast<std::uint32_t>(rs * 4 + rb);
  }
  return p;
}

bool same_table(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  for (Element x = 0; x < a.order(); ++x)
    if (!std::equal(a.row(x).begin(), a.row(x).end(), b.row(x).begin())) return false;
  return true;
}

}  // namespace

TEST_CASE("generators: S3 from a transposition and a 3-cycle") {
  const auto g = group_from_generators(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
  CHECK(g.order() == 6);
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("generators: degree 1 with no generators is trivial") {
  CHECK(group_from_generators(1, {}).order() == 1);
}

TEST_CASE("generators: Q8 by left translation") {
  const auto g = group_from_generators(8, {left_mult_q8(1), left_mult_q8(2)});
  CHECK(g.order() == 8);
  CHECK(oracle::order_census(g)[4] == 6);
  CHECK(oracle::order_census(g)[2] == 1);
}

TEST_CASE("generators reject non-bijections") {
  CHECK_THROWS_AS(group_from_generators(3, {{0, 0, 1}}), GroupError);
}

TEST_CASE("validate_cayley") {
  CHECK(validate_cayley({{0}}).order() == 1);
  const auto c2 = validate_cayley({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.inv(1) == 1);
  CHECK_THROWS_WITH_AS(validate_cayley({{0, 1}, {1, 1}}), "missing inverse", GroupError);
  CHECK_THROWS_AS(validate_cayley({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), GroupError);
}

TEST_CASE("validate_cayley moves the identity to index 0") {
  // C2 with the identity written second
  const auto g = validate_cayley({{1, 0}, {0, 1}});
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("conjugacy data: S3") {
  const auto g = oracle::build("symmetric", "3");
  const auto cd = conjugacy_data(g);
  REQUIRE(cd.class_count() == 3);
  CHECK(cd.sizes == std::vector<std::size_t>{1, 3, 2});
  CHECK(cd.centralizer_orders == std::vector<std::size_t>{6, 2, 3});
}

TEST_CASE("conjugacy data: Q8") {
  const auto cd = conjugacy_data(oracle::build("generalized_quaternion", "4"));
  auto sizes = cd.sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("conjugacy data: Abelian groups have singleton classes") {
  for (const char* p : {"2,2", "3,4", "2,2,2,2"}) {
    const auto g = oracle::build("abelian", p);
    CHECK(conjugacy_data(g).class_count() == g.order());
  }
}

TEST_CASE("conjugacy data invariants agree with brute force") {
  for (auto [f, p] : std::vector<std::pair<const char*, const char*>>{
           {"symmetric", "4"}, {"alternating", "5"}, {"gl2", "3"}, {"heisenberg", "1,3"}, {"frobenius", "7,1,3"}}) {
    const auto g = oracle::build(f, p);
    const auto cd = conjugacy_data(g, std::vector<std::int64_t>{3, 5});
    auto sizes = cd.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::class_sizes(g));
    std::size_t total = 0;
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
      total += cd.sizes[c];
      CHECK(cd.sizes[c] * cd.centralizer_orders[c] == g.order());
      CHECK(cd.inverse_class[cd.inverse_class[c]] == c);
      CHECK(cd.power(1)[c] == c);
      CHECK(cd.class_of[g.mul(cd.reps[c], cd.reps[c])] == cd.power(2)[c]);
      CHECK(cd.class_of[g.pow(cd.reps[c], 5)] == cd.power(5)[c]);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("subgroup closure") {
  const auto s3 = oracle::build("symmetric", "3");
  CHECK(subgroup_closure(s3, std::vector<Element>{0}).order() == 1);
  Element three_cycle = 0;
  for (Element x = 0; x < s3.order(); ++x) {
    if (s3.element_order(x) == 3) three_cycle = x;
  }
  CHECK(subgroup_closure(s3, std::vector<Element>{three_cycle}).order() == 3);

  const auto elements = zoo::symmetric_elements(4);
  const auto s4 = permutation_table(elements);
  std::vector<Element> seed;
  for (Element x = 0; x < elements.size(); ++x) {
    if (elements[x] == cycle(4, {0, 1}) || elements[x] == cycle(4, {0, 1, 2, 3})) seed.push_back(x);
  }
  REQUIRE(seed.size() == 2);
  CHECK(subgroup_closure(s4, seed).order() == 24);
}

TEST_CASE("make_subgroup rejects non-subgroups") {
  const auto c4 = cyclic_group(4);
  CHECK_THROWS_AS(make_subgroup(c4, {0, 1}), GroupError);
  CHECK(make_subgroup(c4, {0, 2}).order() == 2);
}

TEST_CASE("direct products") {
  const auto c2 = cyclic_group(2);
  const auto v4 = direct_product(c2, c2);
  CHECK(v4.order() == 4);
  CHECK(v4.exponent() == 2);
  const auto s3 = oracle::build("symmetric", "3");
  const auto p = direct_product(s3, s3);
  CHECK(p.order() == 36);
  CHECK(conjugacy_data(p).class_count() == 9);
  const auto t = direct_product(GroupTable(), s3);
  CHECK(same_table(t, s3));
}

TEST_CASE("direct products respect the order cap") {
  const auto s3 = oracle::build("symmetric", "3");
  CHECK_THROWS_AS(direct_power(s3, 3, 100), CapExceeded);
  CHECK(direct_power(s3, 2, 100).order() == 36);
}

TEST_CASE("semidirect products") {
  const auto c3 = cyclic_group(3), c2 = cyclic_group(2), c7 = cyclic_group(7);
  const auto s3 = semidirect_product(c3, c2, {{0, 1, 2}, {0, 2, 1}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(conjugacy_data(s3).class_count() == 3);

  std::vector<std::vector<Element>> act(3);
  for (std::uint32_t h = 0; h < 3; ++h) {
    const std::uint32_t m = h == 0 ? 1 : h == 1 ? 2 : 4;
    for (std::uint32_t x = 0; x < 7; ++x) act[h].push_back((x * m) % 7);
  }
  const auto f21 = semidirect_product(c7, c3, act);
  CHECK(f21.order() == 21);
  CHECK(conjugacy_data(f21).class_count() == 5);

  const auto triv = semidirect_product(c3, c2, {{0, 1, 2}, {0, 1, 2}});
  CHECK(triv == direct_product(c3, c2));
  CHECK_THROWS_AS(semidirect_product(c3, c2, {{0, 1, 2}, {1, 2, 0}}), GroupError);
}

TEST_CASE("quotients") {
  const auto s4 = oracle::build("symmetric", "4");
  std::vector<Element> all(24);
  std::iota(all.begin(), all.end(), 0u);
  CHECK(quotient_group(s4, make_subgroup(s4, all)).group.order() == 1);
  CHECK(same_table(quotient_group(s4, make_subgroup(s4, {0})).group, s4));

  // (C4 x| C4, inversion) / <(z, s^2)>
  const auto c4 = cyclic_group(4);
  const auto big = semidirect_product(c4, c4, {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}});
  const Element zs2 = 2 * 4 + 2;
  const auto q = quotient_group(big, subgroup_closure(big, std::vector<Element>{zs2}));
  CHECK(q.group.order() == 8);
  CHECK(oracle::order_census(q.group)[4] == 6);
}

TEST_CASE("quotient by a non-normal subgroup is rejected") {
  const auto s3 = oracle::build("symmetric", "3");
  CHECK_THROWS_AS(quotient_group(s3, make_subgroup(s3, {0, 1})), GroupError);
}

TEST_CASE("group text round trip") {
  const auto g = oracle::build("heisenberg", "1,3");
  CHECK(group_from_string(group_to_string(g)) == g);
  CHECK_THROWS_AS(group_from_string("order 2\n0 1\n"), FormatError);
  CHECK_THROWS_AS(group_from_string("order 2\n0 1\n1 1\n"), GroupError);
}

TEST_CASE("cycle notation") {
  CHECK(cycle_notation(cycle(4, {0, 2, 3})) == "(0 2 3)");
  CHECK(cycle_notation({0, 1, 2}) == "()");
}
