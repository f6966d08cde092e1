#include <doctest.h>

#include <numeric>

#include "kronhecke/error.hpp"
#include "kronhecke/orbits.hpp"
#include "oracles.hpp"

using namespace kronhecke;
using zoo::cyclic_group;

namespace {

SubgroupSpec whole(const GroupTable& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return make_subgroup(g, all);
}

}  // namespace

TEST_CASE("simultaneous classes: S3 and Q8 at d = 2") {
  const auto s3 = simultaneous_classes(oracle::build("symmetric", "3"), 2);
  CHECK(s3.orbit_count == 11);
  CHECK(s3.real_orbit_count == 11);
  const auto q8 = simultaneous_classes(oracle::build("generalized_quaternion", "4"), 2);
  CHECK(q8.orbit_count == 28);
  CHECK(q8.real_orbit_count == 28);
}

TEST_CASE("simultaneous classes: Abelian groups") {
  const auto g = oracle::build("abelian", "2,3");
  CHECK(simultaneous_classes(g, 2).orbit_count == 36);
  CHECK(simultaneous_classes(g, 3).orbit_count == 216);
  CHECK(simultaneous_classes(g, 2).real_orbit_count == 4);
}

TEST_CASE("simultaneous classes respect the cap") {
  const auto g = oracle::build("symmetric", "4");
  CHECK_THROWS_AS(simultaneous_classes(g, 3, 1000), CapExceeded);
  CHECK_NOTHROW(simultaneous_classes(g, 2, 576));
  CHECK_THROWS_AS(simultaneous_classes(g, 0), Error);
}

TEST_CASE("property: orbit partition structure against union-find") {
  for (auto [f, p] : std::vector<std::pair<const char*, const char*>>{
           {"symmetric", "4"}, {"heisenberg", "1,3"}, {"generalized_quaternion", "6"}, {"gl2", "2"}}) {
    const auto g = oracle::build(f, p);
    for (std::uint32_t d = 1; d <= 2; ++d) {
      const auto part = simultaneous_classes(g, d);
      const auto o = oracle::tuple_orbits(g, d);
      CHECK(part.orbit_count == o.orbits);
      CHECK(part.real_orbit_count == o.real_orbits);
      std::uint64_t total = 0, n = 1;
      for (std::uint32_t i = 0; i < d; ++i) n *= g.order();
      for (auto s : part.sizes) {
        total += s;
        CHECK(g.order() % s == 0);
      }
      CHECK(total == n);
      CHECK(std::is_sorted(part.reps.begin(), part.reps.end()));
      // each representative is the least tuple in its orbit
      for (const auto& rep : part.reps) {
        for (Element h = 0; h < g.order(); ++h) {
          std::vector<Element> img;
          for (Element x : rep) img.push_back(g.conj(h, x));
          CHECK_FALSE(img < rep);
        }
      }
    }
  }
}

TEST_CASE("greedy generators generate") {
  for (auto [f, p] : std::vector<std::pair<const char*, const char*>>{{"psl2", "7"}, {"abelian", "2,2,2"}}) {
    const auto g = oracle::build(f, p);
    const auto gens = greedy_generators(g);
    CHECK(subgroup_closure(g, gens).order() == g.order());
  }
  CHECK(greedy_generators(GroupTable()).empty());
}

TEST_CASE("diagonal subgroups") {
  const auto c2 = diagonal_subgroup(cyclic_group(2), 1);
  CHECK(c2.power.order() == 4);
  CHECK(c2.diagonal.order() == 2);
  const auto s3 = diagonal_subgroup(oracle::build("symmetric", "3"), 1);
  CHECK(double_cosets(s3.power, s3.diagonal).cosets.size() == 3);
  const auto c3 = diagonal_subgroup(cyclic_group(3), 2);
  CHECK(c3.power.order() == 27);
  CHECK(double_cosets(c3.power, c3.diagonal).cosets.size() == 9);
}

TEST_CASE("double cosets") {
  const auto g = oracle::build("alternating", "4");
  const auto one = double_cosets(g, whole(g));
  CHECK(one.cosets.size() == 1);
  CHECK(one.self_inverse_count == 1);
  const auto ids = double_cosets(g, make_subgroup(g, {0}));
  CHECK(ids.cosets.size() == 12);
  CHECK(ids.self_inverse_count == oracle::involutions_plus_one(g));
  const auto s3 = diagonal_subgroup(oracle::build("symmetric", "3"), 1);
  const auto dc = double_cosets(s3.power, s3.diagonal);
  CHECK(dc.cosets.size() == 3);
  CHECK(dc.self_inverse_count == 3);
}

TEST_CASE("frame pair counts") {
  const auto g = oracle::build("symmetric", "4");
  CHECK(frame_pair_count(g, whole(g)) == 1);
  CHECK(frame_pair_count(g, make_subgroup(g, {0})) == oracle::involutions_plus_one(g));
  const auto k = make_subgroup(g, zoo::point_stabilizer(zoo::symmetric_elements(4)).elements);
  CHECK(frame_pair_count(g, k) == double_cosets(g, k).self_inverse_count);
}

TEST_CASE("Gelfand symmetry") {
  const auto s3 = diagonal_subgroup(oracle::build("symmetric", "3"), 1);
  CHECK(gelfand_symmetric_check(s3.power, s3.diagonal));
  const auto c4 = cyclic_group(4);
  CHECK_FALSE(gelfand_symmetric_check(c4, make_subgroup(c4, {0})));
  CHECK(gelfand_symmetric_check(c4, whole(c4)));
}

TEST_CASE("property: double cosets against brute force") {
  for (auto [f, p] : std::vector<std::pair<const char*, const char*>>{
           {"symmetric", "4"}, {"gl2", "3"}, {"generalized_quaternion", "4"}}) {
    const auto g = oracle::build(f, p);
    for (Element x = 1; x < g.order(); x += 5) {
      const auto k = subgroup_closure(g, std::vector<Element>{x});
      const auto dc = double_cosets(g, k);
      const auto b = oracle::double_cosets(g, k.elements);
      CHECK(dc.cosets.size() == b.count);
      CHECK(dc.self_inverse_count == b.self_inverse);
      std::uint64_t squares_in_k = 0;
      for (Element h = 0; h < g.order(); ++h) squares_in_k += k.contains(g.mul(h, h));
      CHECK(frame_pair_count(g, k) * k.order() == squares_in_k);
    }
  }
}
