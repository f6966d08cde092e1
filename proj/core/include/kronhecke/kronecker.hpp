#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronhecke/bigint.hpp"
#include "kronhecke/character_table.hpp"

namespace kronhecke {

struct KroneckerResult {
  std::vector<std::size_t> irreps;
  BigInt value;
};

/// Exact values of one quantity obtained by independent formulas.
struct CountReport {
  std::string quantity;  // conj_d, rconj_d, frame, hecke_dim
  std::uint32_t d = 0;
  std::vector<std::pair<std::string, BigInt>> values;  // insertion order is report order
  std::vector<std::string> notes;

  void add(std::string formula, BigInt value);
  const BigInt* find(const std::string& formula) const;
  /// Every value equal and non-negative (and at least one value present).
  bool agree() const;
};

/// kappa(V_1, ..., V_{d+1}) = (1/|G|) sum_c |c| prod_i chi_i(c).
KroneckerResult kronecker(const CharacterTable& t, const std::vector<std::size_t>& tuple);

/// kappa(U, V, W) for every triple, computed classwise over unordered pairs.
class FusionTensor {
 public:
  explicit FusionTensor(const CharacterTable& t);

  std::size_t size() const noexcept { return k_; }
  std::uint32_t operator()(std::size_t u, std::size_t v, std::size_t w) const {
    return n_[(u * k_ + v) * k_ + w];
  }
  /// Multiplicities of every irrep W in U (x) V.
  std::vector<std::uint64_t> product(std::size_t u, std::size_t v) const;
  std::uint32_t max_value() const noexcept { return max_; }
  /// kappa of an arbitrary tuple (length >= 2) by repeated contraction.
  std::uint64_t contract(const std::vector<std::size_t>& tuple) const;

 private:
  std::size_t k_;
  std::vector<std::size_t> dual_;
  std::vector<std::uint32_t> n_;
  std::uint32_t max_ = 0;
};

/// Visits every (d+1)-tuple of irreps in lexicographic order with its kappa,
/// obtained by contracting the fusion tensor. Returning false stops the walk.
template <class F>
void for_each_kappa(const FusionTensor& n, const CharacterTable& t, std::uint32_t d, F&& visit);

inline constexpr std::uint32_t kMaxKappaArity = 3;

/// Burnside count always; the kappa-square sum when d <= 3 and `with_kappa`.
CountReport conj_count(const CharacterTable& t, std::uint32_t d, bool with_kappa = true,
                       const FusionTensor* tensor = nullptr);
/// Square-root moment always; the sigma-weighted kappa sum when d <= 3 and `with_kappa`.
CountReport rconj_count(const CharacterTable& t, std::uint32_t d, bool with_kappa = true,
                        const FusionTensor* tensor = nullptr);

BigInt burnside_count(const CharacterTable& t, std::uint32_t d);
BigInt r_moment(const CharacterTable& t, std::uint32_t d);

struct TupleCheck {
  bool holds = true;
  std::optional<KroneckerResult> witness;
  std::string reason;  // why the witness fails, empty when holds
};

/// All kappa <= 1 over (d+1)-tuples; otherwise the lexicographically least
/// tuple with kappa >= 2.
TupleCheck is_mftp(const CharacterTable& t, std::uint32_t d, const FusionTensor* tensor = nullptr);
/// kappa <= 1 everywhere and sigma product = 1 wherever kappa = 1.
TupleCheck is_d_real_char(const CharacterTable& t, std::uint32_t d, const FusionTensor* tensor = nullptr);

struct ClassificationResult {
  std::map<std::uint32_t, bool> mftp;
  std::map<std::uint32_t, bool> d_real;
  bool real = false;         // every class equals its inverse class
  bool doubly_real = false;  // the character criterion at d = 2
  std::optional<KroneckerResult> witness;
  std::string witness_reason;
};

ClassificationResult classify(const CharacterTable& t, const FusionTensor* tensor = nullptr);

/// sum_V sigma(V) dim V^K; the oracles are added by the caller.
CountReport frame_verify(const CharacterTable& t, const SubgroupSpec& k);
/// sum_V (dim V^K)^2; compared with the double-coset count by the caller.
CountReport hecke_dim_verify(const CharacterTable& t, const SubgroupSpec& k);

struct GelfandCheck {
  bool symmetric = false;  // every double coset is self-inverse
  bool character_side = false;
  bool holds = false;      // the two sides agree
};

/// Character side: dim V^K <= 1 for all V and sigma(V) = 1 whenever dim V^K = 1.
GelfandCheck easy_gelfand_verify(const CharacterTable& t, const SubgroupSpec& k, bool symmetric);

struct CombinatorialProfile {
  bool matched = false;
  std::uint64_t z = 0, a = 0, q = 0;
};

/// Searches for (z, a, q) with q > 2 and z < a such that the centralizer and
/// degree censuses have the prescribed shape. A match forces mftp_2 = false,
/// which is checked (ComputationError otherwise).
CombinatorialProfile combinatorial_profile(const CharacterTable& t, const FusionTensor* tensor = nullptr);

struct SignLawReport {
  std::uint64_t triples = 0;
  std::vector<std::vector<std::size_t>> violations;
};

/// For self-dual U, V, W with W of multiplicity one in U (x) V: sigma(U) sigma(V) = sigma(W).
SignLawReport sign_law_check(const CharacterTable& t, const FusionTensor* tensor = nullptr);

/// kappa(V, V', V', V) for the least irrep of degree >= 2; empty for Abelian groups.
std::optional<KroneckerResult> higher_hecke_witness(const CharacterTable& t);

// ---------------------------------------------------------------------------

template <class F>
void for_each_kappa(const FusionTensor& n, const CharacterTable& t, std::uint32_t d, F&& visit) {
  const std::size_t k = n.size();
  std::vector<std::size_t> tuple(d + 1, 0);
  // levels[i] = decomposition of V_1 (x) ... (x) V_{i+1}
  std::vector<std::vector<std::uint64_t>> levels(d);
  bool stop = false;
  auto rec = [&](auto&& self, std::uint32_t depth) -> void {
    if (stop) return;
    if (depth == d) {
      const auto& m = levels[d - 1];
      for (std::size_t v = 0; v < k && !stop; ++v) {
        tuple[d] = v;
        if (!visit(static_cast<const std::vector<std::size_t>&>(tuple), m[t.dual(v)])) stop = true;
      }
      return;
    }
    for (std::size_t v = 0; v < k && !stop; ++v) {
      tuple[depth] = v;
      if (depth == 0) {
        levels[0].assign(k, 0);
        levels[0][v] = 1;
      } else {
        auto& next = levels[depth];
        next.assign(k, 0);
        const auto& prev = levels[depth - 1];
        for (std::size_t x = 0; x < k; ++x) {
          if (prev[x] == 0) continue;
          const auto p = n.product(x, v);
          for (std::size_t w = 0; w < k; ++w) next[w] += prev[x] * p[w];
        }
      }
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace kronhecke
