#pragma once

#include <cstdint>
#include <vector>

#include "kronhecke/group_table.hpp"

namespace kronhecke {

inline constexpr std::uint64_t kDefaultOrbitCap = 10'000'000;

/// Orbits of G acting on G^d by simultaneous conjugation.
struct OrbitPartition {
  std::uint32_t d = 1;
  std::uint64_t orbit_count = 0;
  std::uint64_t real_orbit_count = 0;
  std::vector<std::vector<Element>> reps;  // least tuple of each orbit, ascending
  std::vector<std::uint64_t> sizes;
  std::vector<bool> real_flags;
};

/// Exhaustive orbit enumeration; |G|^d must not exceed `cap`.
OrbitPartition simultaneous_classes(const GroupTable& g, std::uint32_t d,
                                    std::uint64_t cap = kDefaultOrbitCap);

/// A small generating set: elements taken greedily in index order whenever they
/// enlarge the subgroup generated so far.
std::vector<Element> greedy_generators(const GroupTable& g);

struct DiagonalEmbedding {
  GroupTable power;      // G^{d+1}
  SubgroupSpec diagonal;  // {(g, ..., g)}
};

DiagonalEmbedding diagonal_subgroup(const GroupTable& g, std::uint32_t d,
                                    std::size_t order_cap = kDefaultOrderCap);

struct DoubleCoset {
  Element rep;  // least element
  std::uint64_t size;
  bool self_inverse;
};

struct DoubleCosetDecomposition {
  SubgroupSpec k;
  std::vector<DoubleCoset> cosets;
  std::uint64_t self_inverse_count = 0;
};

DoubleCosetDecomposition double_cosets(const GroupTable& g, const SubgroupSpec& k);

/// (1/|G|) #{(Kx, g) : x g^2 in Kx}.
std::uint64_t frame_pair_count(const GroupTable& g, const SubgroupSpec& k);

/// Every double coset self-inverse.
bool gelfand_symmetric_check(const GroupTable& g, const SubgroupSpec& k);

}  // namespace kronhecke
