#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace kronhecke {

/// Dense element index. The identity is always index 0.
using Element = std::uint32_t;

/// Image list of a permutation of {0, ..., degree-1}.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 20000;

/// A finite group given by its full multiplication table.
///
/// Instances are immutable. The three table invariants (two-sided identity at
/// index 0, two-sided inverses, associativity) hold for every instance: tables
/// from outside the library go through validate_cayley(), and every
/// construction in the library produces them from already valid groups.
class GroupTable {
 public:
  GroupTable() : GroupTable(trusted(1, {0})) {}

  /// Wraps a table whose group axioms are guaranteed by construction. Only the
  /// identity-at-zero shape and the entry range are checked.
  static GroupTable trusted(std::size_t order, std::vector<Element> mul,
                            std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  /// g x g^{-1}
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inv_[g]); }
  Element pow(Element a, std::int64_t k) const;

  std::span<const Element> row(Element a) const noexcept {
    return {mul_.data() + a * order_, order_};
  }
  std::span<const Element> inverses() const noexcept { return inv_; }

  std::size_t element_order(Element a) const;
  /// Least e with g^e = id for all g.
  std::uint64_t exponent() const;
  bool is_abelian() const;
  std::vector<Element> center() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element a) const;

  bool operator==(const GroupTable& other) const = default;

 private:
  GroupTable(std::size_t order, std::vector<Element> mul, std::vector<Element> inv,
             std::vector<std::string> labels)
      : order_(order), mul_(std::move(mul)), inv_(std::move(inv)), labels_(std::move(labels)) {}

  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

/// Conjugacy classes with centralizers and power maps.
struct ConjugacyData {
  std::vector<std::size_t> class_of;  // element -> class
  std::vector<Element> reps;          // least element of each class
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> centralizer_orders;
  std::vector<std::size_t> inverse_class;
  // k -> (class -> class of rep^k)
  std::map<std::int64_t, std::vector<std::size_t>> power_class;

  std::size_t class_count() const noexcept { return reps.size(); }
  const std::vector<std::size_t>& power(std::int64_t k) const;
};

/// A subgroup as a sorted list of element indices.
struct SubgroupSpec {
  std::vector<Element> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Element x) const;
  bool operator==(const SubgroupSpec&) const = default;
};

struct QuotientResult {
  GroupTable group;
  std::vector<Element> projection;  // element of G -> coset index
};

/// Checks identity, inverses and associativity exhaustively. If the identity is
/// not at index 0 it is swapped there.
GroupTable validate_cayley(const std::vector<std::vector<Element>>& table,
                           std::vector<std::string> labels = {});

/// Breadth-first closure of the generators under composition, starting at the
/// identity permutation. Composition is (a*b)(i) = a(b(i)).
std::vector<Permutation> permutation_closure(std::size_t degree,
                                             const std::vector<Permutation>& gens,
                                             std::size_t order_cap = kDefaultOrderCap);
GroupTable group_from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                 std::size_t order_cap = kDefaultOrderCap);
/// Multiplication table of an explicit list of permutations closed under composition;
/// elements[0] must be the identity.
GroupTable permutation_table(const std::vector<Permutation>& elements);
std::string cycle_notation(const Permutation& p);

/// Conjugacy classes of `g`. Power maps for k = 1, k = 2 and every entry of
/// `powers` are filled in.
ConjugacyData conjugacy_data(const GroupTable& g, std::span<const std::int64_t> powers = {});

SubgroupSpec subgroup_closure(const GroupTable& g, std::span<const Element> seed);
/// Wraps an explicit element list after checking it is a subgroup.
SubgroupSpec make_subgroup(const GroupTable& g, std::vector<Element> elements);
bool is_normal(const GroupTable& g, const SubgroupSpec& n);

GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          std::size_t order_cap = kDefaultOrderCap);
/// Iterated product g^k (k >= 1), associated as g x (g x (...)).
GroupTable direct_power(const GroupTable& g, std::size_t k,
                        std::size_t order_cap = kDefaultOrderCap);
/// A x| H with (a,h)(a',h') = (a * action[h](a'), h h'). Element (a,h) has
/// index a*|H| + h.
GroupTable semidirect_product(const GroupTable& a, const GroupTable& h,
                              const std::vector<std::vector<Element>>& action,
                              std::size_t order_cap = kDefaultOrderCap);
/// G/N with cosets numbered by their least element.
QuotientResult quotient_group(const GroupTable& g, const SubgroupSpec& n);

/// Text exchange format: "order n", then n rows of the table, then optionally n
/// lines "# label".
void write_group(std::ostream& out, const GroupTable& g);
GroupTable read_group(std::istream& in);
std::string group_to_string(const GroupTable& g);
GroupTable group_from_string(const std::string& text);

}  // namespace kronhecke
