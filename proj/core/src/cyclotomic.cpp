#include "kronhecke/cyclotomic.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "kronhecke/error.hpp"

namespace kronhecke {

namespace {

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, std::unique_ptr<const std::vector<std::int64_t>>>& phi_memo() {
  static std::map<std::uint64_t, std::unique_ptr<const std::vector<std::int64_t>>> memo;
  return memo;
}

// Exact quotient of a by the monic b; a is overwritten.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return quot;
}

void add_scaled(mpz_ptr target, mpz_srcptr c, std::int64_t s) {
  if (s > 0)
    mpz_addmul_ui(target, c, static_cast<unsigned long>(s));
  else if (s < 0)
    mpz_submul_ui(target, c, static_cast<unsigned long>(-s));
}

// Reduces a polynomial in zeta_e (any length) to length phi(e).
std::vector<BigInt> reduce(std::vector<BigInt> poly, std::uint64_t e) {
  const auto& phi = cyclotomic_polynomial(e);
  const std::size_t deg = phi.size() - 1;
  if (poly.size() > e) {
    for (std::size_t i = e; i < poly.size(); ++i) poly[i % e] += poly[i];
    poly.resize(e);
  }
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const BigInt c = poly[i];
    for (std::size_t j = 0; j < deg; ++j) add_scaled(poly[i - deg + j].get_mpz_t(), c.get_mpz_t(), -phi[j]);
    poly[i] = 0;
  }
  poly.resize(deg);
  return poly;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t e) {
  std::uint64_t result = e;
  for (std::uint64_t p = 2; p * p <= e; ++p) {
    if (e % p) continue;
    while (e % p == 0) e /= p;
    result -= result / p;
  }
  if (e > 1) result -= result / e;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t e) {
  if (e == 0) throw Error("conductor must be positive");
  {
    std::lock_guard lock(phi_mutex());
    auto it = phi_memo().find(e);
    if (it != phi_memo().end()) return *it->second;
  }
  std::vector<std::int64_t> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (std::uint64_t d = 1; d < e; ++d)
    if (e % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(phi_mutex());
  auto [it, inserted] =
      phi_memo().emplace(e, std::make_unique<const std::vector<std::int64_t>>(std::move(poly)));
  return *it->second;
}

Cyclotomic::Cyclotomic(const BigRational& value, std::uint64_t conductor) : conductor_(conductor) {
  if (conductor == 0) throw Error("conductor must be positive");
  num_.resize(euler_phi(conductor));
  num_[0] = value.get_num();
  den_ = value.get_den();
}

Cyclotomic Cyclotomic::root(std::uint64_t e, std::int64_t k) {
  std::vector<BigInt> powers(e);
  const auto se = static_cast<std::int64_t>(e);
  powers[static_cast<std::size_t>(((k % se) + se) % se)] = 1;
  return from_powers(e, powers);
}

Cyclotomic Cyclotomic::from_powers(std::uint64_t e, std::span<const BigInt> coeffs) {
  Cyclotomic r = zero(e);
  r.num_ = reduce(std::vector<BigInt>(coeffs.begin(), coeffs.end()), e);
  if (r.num_.size() < euler_phi(e)) r.num_.resize(euler_phi(e));
  return r;
}

BigRational Cyclotomic::coefficient(std::size_t i) const {
  BigRational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : num_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (sgn(num_[i]) != 0) return false;
  return true;
}

BigRational Cyclotomic::to_rational() const {
  if (!is_rational()) throw ComputationError("not rational: " + serialize());
  return coefficient(0);
}

BigInt Cyclotomic::to_integer() const {
  const BigRational r = to_rational();
  if (r.get_den() != 1) throw ComputationError("not an integer: " + serialize());
  return r.get_num();
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const auto e = static_cast<std::int64_t>(conductor_);
  if (std::gcd(((k % e) + e) % e, e) != 1 && e != 1) throw Error("Galois exponent not coprime to conductor");
  std::vector<BigInt> powers(conductor_);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const auto idx = static_cast<std::size_t>((((static_cast<std::int64_t>(i) * k) % e) + e) % e);
    powers[idx] += num_[i];
  }
  Cyclotomic r = zero(conductor_);
  r.num_ = reduce(std::move(powers), conductor_);
  r.den_ = den_;
  return r;
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::promoted(std::uint64_t e) const {
  if (e == conductor_) return *this;
  if (e % conductor_ != 0) throw Error("promotion target is not a multiple of the conductor");
  const std::uint64_t m = e / conductor_;
  std::vector<BigInt> powers(e);
  for (std::size_t i = 0; i < num_.size(); ++i) powers[i * m] = num_[i];
  Cyclotomic r = zero(e);
  r.num_ = reduce(std::move(powers), e);
  r.den_ = den_;
  return r;
}

std::pair<double, double> Cyclotomic::approx() const {
  double re = 0, im = 0;
  const double d = den_.get_d();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(conductor_);
    re += num_[i].get_d() / d * std::cos(angle);
    im += num_[i].get_d() / d * std::sin(angle);
  }
  return {re, im};
}

void Cyclotomic::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : num_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor_ != conductor_) {
    const std::uint64_t l = std::lcm(conductor_, o.conductor_);
    *this = promoted(l);
    return *this += o.promoted(l);
  }
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= o.den_;
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    const std::uint64_t l = std::lcm(a.conductor_, b.conductor_);
    return a.promoted(l) * b.promoted(l);
  }
  const std::size_t n = a.num_.size();
  std::vector<BigInt> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.num_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  Cyclotomic r = Cyclotomic::zero(a.conductor_);
  r.num_ = reduce(std::move(prod), a.conductor_);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator*=(const BigRational& s) {
  for (auto& c : num_) c *= s.get_num();
  den_ *= s.get_den();
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    const std::uint64_t l = std::lcm(a.conductor_, b.conductor_);
    return a.promoted(l) == b.promoted(l);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string Cyclotomic::serialize() const {
  std::string s = std::to_string(conductor_) + ":[";
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (sgn(num_[i]) == 0) continue;
    if (!first) s += ',';
    first = false;
    s += std::to_string(i) + "=" + to_fraction(coefficient(i));
  }
  return s + "]";
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto fail = [&]() -> Cyclotomic {
    throw FormatError("format error: bad cyclotomic '" + std::string(text) + "'");
  };
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.size() < colon + 3 || text[colon + 1] != '[' ||
      text.back() != ']')
    return fail();
  std::uint64_t e = 0;
  {
    auto head = trim(text.substr(0, colon));
    auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), e);
    if (ec != std::errc() || p != head.data() + head.size() || e == 0) return fail();
  }
  std::string_view body = text.substr(colon + 2, text.size() - colon - 3);
  std::vector<BigRational> powers(e);
  std::vector<bool> seen(e, false);
  while (!trim(body).empty()) {
    const auto comma = body.find(',');
    auto item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) return fail();
    std::uint64_t idx = 0;
    auto idx_text = trim(item.substr(0, eq));
    auto [p, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), idx);
    if (ec != std::errc() || p != idx_text.data() + idx_text.size() || idx >= e || seen[idx]) return fail();
    seen[idx] = true;
    std::string value(trim(item.substr(eq + 1)));
    if (value.empty()) return fail();
    BigRational q;
    const auto slash = value.find('/');
    BigInt num, den(1);
    if (num.set_str(value.substr(0, slash), 10) != 0) return fail();
    if (slash != std::string::npos && den.set_str(value.substr(slash + 1), 10) != 0) return fail();
    if (sgn(den) == 0) return fail();
    q = BigRational(num, den);
    q.canonicalize();
    powers[idx] = q;
  }
  BigInt common = 1;
  for (const auto& c : powers) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints(e);
  for (std::size_t i = 0; i < e; ++i) ints[i] = powers[i].get_num() * (common / powers[i].get_den());
  Cyclotomic r = from_powers(e, ints);
  r.den_ = common;
  r.normalize();
  return r;
}

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
  }
  return a;
}

void CyclotomicSum::add(const Cyclotomic& term) {
  auto it = parts_.find(term.conductor());
  if (it == parts_.end())
    parts_.emplace(term.conductor(), term);
  else
    it->second += term;
}

Cyclotomic CyclotomicSum::total() const {
  BigRational rational(0);
  Cyclotomic rest;
  for (const auto& [e, part] : parts_) {
    if (part.is_rational())
      rational += part.to_rational();
    else
      rest += part;
  }
  return rest + Cyclotomic(rational);
}

}  // namespace kronhecke
