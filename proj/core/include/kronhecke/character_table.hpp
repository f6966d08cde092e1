#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kronhecke/bigint.hpp"
#include "kronhecke/cyclotomic.hpp"
#include "kronhecke/group_table.hpp"

namespace kronhecke {

/// An irreducible character: one value per conjugacy class.
struct Character {
  std::uint64_t degree = 1;
  std::vector<Cyclotomic> values;

  bool is_real() const;  // equal to its complex conjugate
  std::vector<std::string> serialized_values() const;
};

/// Frobenius-Schur indicators per irrep and square-root counts per class.
struct IndicatorData {
  std::vector<int> sigma;
  std::vector<BigInt> r;
  BigInt r_max;
};

/// Structure constants of the class algebra. matrix(j) is the k x k matrix
/// whose (i, l) entry counts pairs (x, y) in class_j x class_i with x y = rep_l;
/// built on demand so only one matrix is alive at a time.
class ClassMatrices {
 public:
  ClassMatrices(const GroupTable& g, const ConjugacyData& cd);

  std::size_t classes() const noexcept { return cd_.class_count(); }
  std::vector<std::uint64_t> matrix(std::size_t j) const;

 private:
  const GroupTable& g_;
  const ConjugacyData& cd_;
  std::vector<std::vector<Element>> members_;
};

/// An exact character table together with the class metadata every formula
/// downstream needs. Tables computed from a GroupTable keep a handle to the
/// group and its ConjugacyData; imported tables carry the class metadata only.
class CharacterTable {
 public:
  CharacterTable(BigInt order, BigInt exponent, std::vector<BigInt> class_sizes,
                 std::vector<std::size_t> power2, std::vector<Character> irreps);

  const BigInt& order() const noexcept { return order_; }
  const BigInt& exponent() const noexcept { return exponent_; }
  std::size_t class_count() const noexcept { return sizes_.size(); }
  std::size_t irrep_count() const noexcept { return irreps_.size(); }
  const std::vector<BigInt>& class_sizes() const noexcept { return sizes_; }
  const std::vector<std::size_t>& power2() const noexcept { return power2_; }
  const std::vector<std::size_t>& inverse_class() const noexcept { return inverse_; }
  const std::vector<Character>& irreps() const noexcept { return irreps_; }
  const Character& irrep(std::size_t i) const { return irreps_.at(i); }
  const IndicatorData& indicators() const noexcept { return fs_; }

  /// Index of the irrep whose character is the complex conjugate of irrep i.
  std::size_t dual(std::size_t i) const { return dual_.at(i); }
  std::size_t trivial_index() const noexcept { return trivial_; }

  const GroupTable* group() const noexcept { return group_.get(); }
  const ConjugacyData* conjugacy() const noexcept { return conjugacy_ ? &*conjugacy_ : nullptr; }

  /// Row orthogonality, both relations when `columns` is set. Throws
  /// ComputationError on failure.
  void verify_orthogonality(bool columns) const;

  bool operator==(const CharacterTable& o) const;

 private:
  friend CharacterTable character_table(const GroupTable&);
  void attach(std::shared_ptr<const GroupTable> g, ConjugacyData cd);
  void derive();

  BigInt order_;
  BigInt exponent_;
  std::vector<BigInt> sizes_;
  std::vector<std::size_t> power2_;
  std::vector<std::size_t> inverse_;
  std::vector<Character> irreps_;
  std::vector<std::size_t> dual_;
  std::size_t trivial_ = 0;
  IndicatorData fs_;
  std::shared_ptr<const GroupTable> group_;
  std::optional<ConjugacyData> conjugacy_;
};

/// Exact character table by the Dixon-Schneider method. Irreps are sorted by
/// degree, then by their serialized value lists. Both orthogonality relations
/// are checked before the table is returned.
CharacterTable character_table(const GroupTable& g);

/// Throws ComputationError unless the rows are orthonormal for the class-size
/// weighted inner product.
void verify_row_orthogonality(const BigInt& order, const std::vector<BigInt>& sizes,
                              const std::vector<Character>& irreps);

/// sigma per irrep and r per class; used internally by the table constructor.
IndicatorData fs_indicators(const CharacterTable& t);

/// dim V^K = (1/|K|) sum_{k in K} chi_V(k). Needs a table computed from a group.
std::uint64_t dim_fixed_space(const CharacterTable& t, std::size_t irrep, const SubgroupSpec& k);

/// Least prime p = 1 (mod e) with p > 2 sqrt(n).
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

/// Character-table exchange format (see README).
void write_table(std::ostream& out, const CharacterTable& t);
CharacterTable read_table(std::istream& in);
std::string table_to_string(const CharacterTable& t);
CharacterTable table_from_string(const std::string& text);

}  // namespace kronhecke
