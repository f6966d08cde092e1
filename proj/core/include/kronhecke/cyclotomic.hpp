#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kronhecke/bigint.hpp"

namespace kronhecke {

/// Integer coefficients of the e-th cyclotomic polynomial, low degree first.
/// Memoized; safe to call from several threads.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t e);

std::uint64_t euler_phi(std::uint64_t e);

/// An exact element of Q(zeta_e), stored as sum c_i zeta_e^i reduced modulo
/// Phi_e (so 0 <= i < phi(e)). Coefficients share one positive denominator and
/// are kept in lowest terms, which makes the representation canonical for a
/// fixed conductor.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(BigRational(0), 1) {}
  Cyclotomic(const BigRational& value, std::uint64_t conductor = 1);
  Cyclotomic(std::int64_t value, std::uint64_t conductor = 1) : Cyclotomic(BigRational(value), conductor) {}

  /// Zero in Q(zeta_e).
  static Cyclotomic zero(std::uint64_t e) { return Cyclotomic(BigRational(0), e); }
  /// zeta_e^k
  static Cyclotomic root(std::uint64_t e, std::int64_t k);
  /// sum_k coeffs[k] zeta_e^k for a coefficient list of any length (indices are
  /// read modulo e).
  static Cyclotomic from_powers(std::uint64_t e, std::span<const BigInt> coeffs);

  std::uint64_t conductor() const noexcept { return conductor_; }
  std::size_t degree() const noexcept { return num_.size(); }
  BigRational coefficient(std::size_t i) const;
  const std::vector<BigInt>& numerators() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const { return den_ == 1; }
  /// Throws ComputationError("not rational") unless the value lies in Q.
  BigRational to_rational() const;
  /// to_rational() that additionally insists on an integer.
  BigInt to_integer() const;

  /// Image under zeta -> zeta^{-1}.
  Cyclotomic conjugate() const;
  /// Image under zeta -> zeta^k for k coprime to the conductor.
  Cyclotomic galois(std::int64_t k) const;
  /// The same value written in Q(zeta_e) for a multiple e of the conductor.
  Cyclotomic promoted(std::uint64_t e) const;

  /// Approximate complex value (display only).
  std::pair<double, double> approx() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const BigRational& s);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const BigRational& s) { return a *= s; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "e:[i=num/den,...]", sparse, ascending index.
  std::string serialize() const;
  static Cyclotomic parse(std::string_view text);

 private:
  void normalize();

  std::uint64_t conductor_;
  std::vector<BigInt> num_;
  BigInt den_{1};
};

/// Accumulates terms keyed by conductor so that sums over many classes do not
/// promote every term to one huge field. Galois-stable groups of terms collapse
/// to rationals; only a genuinely irrational remainder is promoted.
class CyclotomicSum {
 public:
  void add(const Cyclotomic& term);
  Cyclotomic total() const;

 private:
  std::map<std::uint64_t, Cyclotomic> parts_;
};

enum class CycOp { add, sub, mul };
Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op);

}  // namespace kronhecke
