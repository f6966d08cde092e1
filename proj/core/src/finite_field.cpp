#include "kronhecke/finite_field.hpp"

#include "kronhecke/error.hpp"

namespace kronhecke {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, trailing zeros trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t x, std::uint32_t p, std::uint32_t k) {
  Poly a(k);
  for (std::uint32_t i = 0; i < k; ++i, x /= p) a[i] = x % p;
  return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
  return x;
}

Poly monic_from_code(std::uint32_t code, std::uint32_t p, std::uint32_t deg) {
  Poly f = decode(code, p, deg);
  f.push_back(1);
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code)
      if (poly_mod(f, monic_from_code(code, p, d), p).empty()) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  Poly c = decode(a, p, k);
  for (auto& v : c) v = (p - v) % p;
  return encode(c, p);
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw GroupError("zero has no inverse");
  return pow(a, q - 2);
}

std::uint32_t FiniteField::multiplicative_order(std::uint32_t a) const {
  if (a == 0) throw GroupError("zero has no multiplicative order");
  std::uint32_t o = 1;
  for (std::uint32_t x = a; x != 1; x = mul(x, a)) ++o;
  return o;
}

FiniteField make_field(std::uint32_t q) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw GroupError("q = " + std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder) throw GroupError("field order " + std::to_string(q) + " above supported maximum");

  FiniteField f;
  f.p = p;
  f.k = k;
  f.q = q;
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint32_t code = 0; code < count; ++code) {
    Poly m = monic_from_code(code, p, k);
    if (is_irreducible(m, p)) {
      f.modulus = std::move(m);
      break;
    }
  }

  f.add_table.resize(static_cast<std::size_t>(q) * q);
  f.mul_table.resize(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = decode(a, p, k);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = decode(b, p, k);
      Poly sum(k);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      f.add_table[a * q + b] = encode(sum, p);
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      f.mul_table[a * q + b] = encode(poly_mod(std::move(prod), f.modulus, p), p);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    if (f.multiplicative_order(a) == q - 1) {
      f.primitive = a;
      break;
    }
  return f;
}

}  // namespace kronhecke
