#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kronhecke {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt to_big(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Canonical "num/den" rendering, always with an explicit denominator.
inline std::string to_fraction(const BigRational& v) {
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

}  // namespace kronhecke
