#include <doctest.h>

#include "kronhecke/error.hpp"
#include "kronhecke/finite_field.hpp"
#include "kronhecke/zoo.hpp"
#include "oracles.hpp"

using namespace kronhecke;
using zoo::cyclic_group;

TEST_CASE("field: F2") {
  const auto f = make_field(2);
  CHECK(f.add(1, 1) == 0);
  CHECK(f.mul(1, 1) == 1);
}

TEST_CASE("field: F4 has characteristic 2 and a generator of order 3") {
  const auto f = make_field(4);
  CHECK(f.p == 2);
  CHECK(f.k == 2);
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(f.add(x, x) == 0);
  CHECK(f.multiplicative_order(f.primitive) == 3);
}

TEST_CASE("field: non prime powers are rejected") {
  CHECK_THROWS_AS(make_field(6), GroupError);
  CHECK_THROWS_AS(make_field(1), GroupError);
  CHECK_THROWS_AS(make_field(64), GroupError);
}

TEST_CASE("field axioms hold exhaustively for every supported order") {
  for (std::uint32_t q = 2; q <= kMaxFieldOrder; ++q) {
    if (prime_power(q).first == 0) continue;
    CAPTURE(q);
    const auto f = make_field(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      ok = ok && f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
      if (a) ok = ok && f.mul(a, f.inv(a)) == 1;
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
          ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
        }
      }
    }
    CHECK(ok);
    CHECK(f.multiplicative_order(f.primitive) == q - 1);
  }
}

TEST_CASE("family names round trip") {
  const auto s = zoo::parse_family("heisenberg", "1,3");
  CHECK(s.family == zoo::Family::heisenberg);
  CHECK(s.params == std::vector<std::int64_t>{1, 3});
  CHECK(s.describe() == "heisenberg[1,3]");
  CHECK(zoo::parse_family("abelian", "[2, 4]").params == std::vector<std::int64_t>{2, 4});
  CHECK_THROWS_AS(zoo::parse_family("nonsense", "1"), GroupError);
  CHECK_THROWS_AS(zoo::parse_family("cyclic", "x"), GroupError);
}

TEST_CASE("generalized dihedral of C4 is D8") {
  const auto g = oracle::build("generalized_dihedral", "4");
  CHECK(g.order() == 8);
  CHECK(oracle::class_sizes(g).size() == 5);
  CHECK(oracle::order_census(g)[4] == 2);
}

TEST_CASE("generalized quaternion of C4 is Q8") {
  const auto g = oracle::build("generalized_quaternion", "4");
  CHECK(g.order() == 8);
  CHECK(oracle::order_census(g)[4] == 6);
}

TEST_CASE("heisenberg over F2 is dihedral of order 8") {
  const auto g = oracle::build("heisenberg", "1,2");
  CHECK(g.order() == 8);
  CHECK(oracle::order_census(g)[4] == 2);
}

TEST_CASE("frobenius(7,1,3) class sizes") {
  const auto g = oracle::build("frobenius", "7,1,3");
  CHECK(g.order() == 21);
  CHECK(oracle::class_sizes(g) == std::vector<std::size_t>{1, 3, 3, 7, 7});
}

TEST_CASE("psl2(7) has order 168 and 6 classes") {
  const auto g = oracle::build("psl2", "7");
  CHECK(g.order() == 168);
  CHECK(conjugacy_data(g).class_count() == 6);
  CHECK(g.center().size() == 1);
}

TEST_CASE("family orders") {
  struct Case {
    const char* f;
    const char* p;
    std::size_t order;
  };
  for (const auto& c : std::vector<Case>{{"cyclic", "12", 12},
                                         {"abelian", "2,3,4", 24},
                                         {"symmetric", "5", 120},
                                         {"alternating", "5", 60},
                                         {"generalized_dihedral", "2,2", 8},
                                         {"generalized_quaternion", "8", 16},
                                         {"heisenberg", "2,2", 32},
                                         {"heisenberg", "1,4", 64},
                                         {"extraspecial2", "1,1", 32},
                                         {"gl2", "2", 6},
                                         {"gl2", "3", 48},
                                         {"gl2", "4", 180},
                                         {"psl2", "5", 60},
                                         {"frobenius", "13,1,3", 39},
                                         {"frobenius", "2,2,3", 12},
                                         {"heisenberg_odd_p3", "3,0", 27},
                                         {"heisenberg_odd_p3", "3,1", 27}}) {
    CAPTURE(c.f);
    CAPTURE(c.p);
    CHECK(oracle::build(c.f, c.p).order() == c.order);
  }
}

TEST_CASE("the two odd extraspecial groups of order 27 differ in exponent") {
  const auto a = oracle::build("heisenberg_odd_p3", "3,0");
  const auto b = oracle::build("heisenberg_odd_p3", "3,1");
  CHECK(a.exponent() == 3);
  CHECK(b.exponent() == 9);
  CHECK(a.center().size() == 3);
  CHECK(b.center().size() == 3);
}

TEST_CASE("invalid family parameters") {
  CHECK_THROWS_AS(oracle::build("generalized_quaternion", "3"), GroupError);  // no involution
  CHECK_THROWS_AS(oracle::build("generalized_quaternion", "2,2"), GroupError);
  CHECK_THROWS_AS(oracle::build("generalized_quaternion", "2,4"), GroupError);
  CHECK_THROWS_AS(oracle::build("frobenius", "7,1,5"), GroupError);
  CHECK_THROWS_AS(oracle::build("heisenberg", "1,6"), GroupError);
  CHECK_THROWS_AS(oracle::build("symmetric", ""), GroupError);
  CHECK_THROWS_AS(zoo::zoo_build(zoo::parse_family("symmetric", "9")), CapExceeded);
}

TEST_CASE("central products of D8 and Q8") {
  const auto d8 = oracle::build("generalized_dihedral", "4");
  const auto q8 = oracle::build("generalized_quaternion", "4");
  auto z = [](const GroupTable& g) { return g.center().at(1); };
  const auto dq = zoo::central_product(d8, q8, z(d8), z(q8));
  CHECK(dq.order() == 32);
  CHECK(dq.center().size() == 2);
  const auto dd = zoo::central_product(d8, d8, z(d8), z(d8));
  CHECK(dd.order() == 32);
  // D8 o D8 and Q8 o Q8 are isomorphic; D8 o Q8 is the other extraspecial group.
  const auto qq = zoo::central_product(q8, q8, z(q8), z(q8));
  CHECK(oracle::order_census(dd) == oracle::order_census(qq));
  CHECK(oracle::order_census(dd) != oracle::order_census(dq));
  CHECK_THROWS_AS(zoo::central_product(d8, q8, 0, z(q8)), GroupError);
  CHECK_THROWS_AS(zoo::central_product(d8, q8, 0, 0), GroupError);
}

TEST_CASE("extraspecial2 mixes") {
  const auto dd = oracle::build("extraspecial2", "2,0");
  const auto dq = oracle::build("extraspecial2", "1,1");
  CHECK(dd.center().size() == 2);
  CHECK(oracle::order_census(dd)[2] == 19);
  CHECK(oracle::order_census(dq)[2] == 11);
}

TEST_CASE("unique involution squares") {
  CHECK(zoo::involution_is_square({4}));
  CHECK_FALSE(zoo::involution_is_square({6}));
  CHECK(zoo::involution_is_square({8}));
  CHECK(zoo::involution_is_square({3, 4}));
  CHECK_FALSE(zoo::involution_is_square({2}));
  CHECK_FALSE(zoo::involution_is_square({2, 5}));
}

TEST_CASE("subgroup presets") {
  const auto s4 = oracle::build("symmetric", "4");
  const auto k = zoo::point_stabilizer(zoo::symmetric_elements(4));
  CHECK(k.order() == 6);
  CHECK_NOTHROW(make_subgroup(s4, k.elements));
  const auto a5 = oracle::build("alternating", "5");
  const auto k5 = zoo::point_stabilizer(zoo::alternating_elements(5));
  CHECK(k5.order() == 12);
  CHECK_NOTHROW(make_subgroup(a5, k5.elements));
  const auto gl = oracle::build("gl2", "3");
  const auto b = zoo::borel_subgroup(3);
  CHECK(b.order() == 12);
  CHECK_NOTHROW(make_subgroup(gl, b.elements));
}

TEST_CASE("zoo groups pass full Cayley validation") {
  for (auto [f, p] : std::vector<std::pair<const char*, const char*>>{
           {"generalized_quaternion", "6"}, {"heisenberg", "1,3"}, {"gl2", "3"}, {"extraspecial2", "0,2"}}) {
    const auto g = oracle::build(f, p);
    std::vector<std::vector<Element>> rows(g.order());
    for (Element a = 0; a < g.order(); ++a) rows[a].assign(g.row(a).begin(), g.row(a).end());
    CHECK(validate_cayley(rows).order() == g.order());
  }
}
