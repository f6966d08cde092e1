#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kronhecke/finite_field.hpp"
#include "kronhecke/group_table.hpp"

namespace kronhecke::zoo {

enum class Family {
  cyclic,                  // [n]
  abelian,                 // [n1, n2, ...]  C_n1 x C_n2 x ...
  symmetric,               // [n]
  alternating,             // [n]
  generalized_dihedral,    // [n1, ...]  D(A), A = C_n1 x ...
  generalized_quaternion,  // [n1, ...]  Q(A), A must have a unique involution
  heisenberg,              // [n, q]  H_n(F_q)
  extraspecial2,           // [a, b]  D8^{oa} o Q8^{ob}
  gl2,                     // [q]
  psl2,                    // [q]
  frobenius,               // [p, b, q]  C_p^b x| C_q
  heisenberg_odd_p3,       // [p, variant]  variant 0: C_p^2 x| C_p, 1: C_{p^2} x| C_p
};

struct FamilySpec {
  Family family = Family::cyclic;
  std::vector<std::int64_t> params;

  /// e.g. heisenberg[1,3]
  std::string describe() const;
  bool operator==(const FamilySpec&) const = default;
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
/// Parses "name" plus a comma separated parameter list such as "1,3".
FamilySpec parse_family(std::string_view name, std::string_view params);

GroupTable zoo_build(const FamilySpec& spec, std::size_t order_cap = kDefaultOrderCap);

GroupTable cyclic_group(std::size_t n);
GroupTable abelian_group(const std::vector<std::int64_t>& factors);
/// A permutation model of S_n (generators (0 1) and (0 1 ... n-1)).
std::vector<Permutation> symmetric_elements(std::size_t n);
/// A_n generated by the 3-cycles (0 1 i).
std::vector<Permutation> alternating_elements(std::size_t n);
/// Elements of GL_2(F_q) as (a, b, c, d) codes in table order; identity first.
std::vector<std::uint32_t> gl2_elements(const FiniteField& f);

/// (G x H)/<(zG, zH)> for central elements of equal order.
GroupTable central_product(const GroupTable& g, const GroupTable& h, Element zg, Element zh,
                           std::size_t order_cap = kDefaultOrderCap);

/// For A = C_n1 x ... with a unique involution z: whether z is a square in A.
bool involution_is_square(const std::vector<std::int64_t>& factors);

/// Stabilizer of the last point in the permutation model of S_n or A_n.
SubgroupSpec point_stabilizer(const std::vector<Permutation>& elements);
/// Upper triangular matrices inside gl2(q) as built by zoo_build.
SubgroupSpec borel_subgroup(std::uint32_t q);

}  // namespace kronhecke::zoo
