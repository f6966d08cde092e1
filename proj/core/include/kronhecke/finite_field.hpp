#pragma once

#include <cstdint>
#include <vector>

namespace kronhecke {

/// GF(q) for q = p^k, elements encoded as base-p digit strings of polynomial
/// coefficients: element x = sum c_i p^i stands for sum c_i t^i in F_p[t]/(f).
struct FiniteField {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // monic f, coefficients c_0..c_k
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;
  std::uint32_t primitive = 1;  // generator of the multiplicative group

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_table[a * q + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_table[a * q + b]; }
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t multiplicative_order(std::uint32_t a) const;
};

inline constexpr std::uint32_t kMaxFieldOrder = 49;

/// F_p[t]/(f) with f the least monic irreducible of degree k, where monic
/// polynomials of degree k are ordered by the integer c_0 + c_1 p + ... +
/// c_{k-1} p^{k-1}. Throws GroupError when q is not a prime power <= 49.
FiniteField make_field(std::uint32_t q);

bool is_prime(std::uint64_t n);
/// (p, k) with q = p^k, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace kronhecke
