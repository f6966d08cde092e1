#include "kronhecke/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "kronhecke/error.hpp"
#include "kronhecke/finite_field.hpp"

namespace kronhecke {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw ComputationError("verification failed: division by zero mod p");
  return powmod(a, p - 2, p);
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors) {
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p == 2
}

using Rows = std::vector<std::vector<u64>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Rows& m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const u64 iv = invmod(m[r][c], p);
    for (auto& x : m[r]) x = mulmod(x, iv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t t = c; t < cols; ++t) m[i][t] = (m[i][t] + p - mulmod(f, m[r][t], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of {x : A x = 0} for square A.
Rows kernel(Rows a, u64 p) {
  const std::size_t n = a.size();
  auto piv = rref(a, p);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Rows out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][free]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

struct Subspace {
  Rows basis;  // rows in RREF
  std::vector<std::size_t> pivots;
};

// Split `s` into eigenspaces of the class matrix m (k x k, row-major).
std::vector<Subspace> split(const Subspace& s, const std::vector<u64>& m, std::size_t k, u64 p) {
  const std::size_t dim = s.basis.size();
  // Image of each basis vector, expressed in basis coordinates.
  Rows a(dim, std::vector<u64>(dim, 0));
  for (std::size_t r = 0; r < dim; ++r) {
    const auto& v = s.basis[r];
    std::vector<u64> u(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      u64 acc = 0;
      for (std::size_t l = 0; l < k; ++l) {
        if (v[l] && m[i * k + l]) acc = (acc + mulmod(m[i * k + l] % p, v[l], p)) % p;
      }
      u[i] = acc;
    }
    for (std::size_t t = 0; t < dim; ++t) a[t][r] = u[s.pivots[t]];
  }

  std::vector<Subspace> pieces;
  std::size_t found = 0;
  for (u64 lambda = 0; lambda < p && found < dim; ++lambda) {
    Rows shifted = a;
    for (std::size_t t = 0; t < dim; ++t) shifted[t][t] = (shifted[t][t] + p - lambda) % p;
    Rows ker = kernel(std::move(shifted), p);
    if (ker.empty()) continue;
    Subspace piece;
    for (const auto& c : ker) {
      std::vector<u64> w(k, 0);
      for (std::size_t t = 0; t < dim; ++t) {
        if (c[t] == 0) continue;
        for (std::size_t l = 0; l < k; ++l) w[l] = (w[l] + mulmod(c[t], s.basis[t][l], p)) % p;
      }
      piece.basis.push_back(std::move(w));
    }
    piece.pivots = rref(piece.basis, p);
    found += piece.basis.size();
    pieces.push_back(std::move(piece));
  }
  if (found != dim) throw ComputationError("verification failed: class matrix not diagonalizable mod p");
  return pieces;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q <= n; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

bool Character::is_real() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Cyclotomic& v) { return v.conjugate() == v; });
}

std::vector<std::string> Character::serialized_values() const {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.serialize());
  return out;
}

ClassMatrices::ClassMatrices(const GroupTable& g, const ConjugacyData& cd)
    : g_(g), cd_(cd), members_(cd.class_count()) {
  for (Element x = 0; x < g.order(); ++x) members_[cd.class_of[x]].push_back(x);
}

std::vector<std::uint64_t> ClassMatrices::matrix(std::size_t j) const {
  const std::size_t k = cd_.class_count();
  std::vector<std::uint64_t> m(k * k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    const Element rep = cd_.reps[l];
    for (Element x : members_.at(j)) {
      const Element y = g_.mul(g_.inv(x), rep);
      ++m[cd_.class_of[y] * k + l];
    }
  }
  return m;
}

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  if (exponent == 0) throw GroupError("exponent must be positive");
  for (u64 p = exponent + 1;; p += exponent) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

CharacterTable::CharacterTable(BigInt order, BigInt exponent, std::vector<BigInt> class_sizes,
                               std::vector<std::size_t> power2, std::vector<Character> irreps)
    : order_(std::move(order)),
      exponent_(std::move(exponent)),
      sizes_(std::move(class_sizes)),
      power2_(std::move(power2)),
      irreps_(std::move(irreps)) {
  const std::size_t k = sizes_.size();
  if (k == 0) throw FormatError("format error: table has no classes");
  if (power2_.size() != k) throw FormatError("format error: powermap2 length mismatch");
  for (auto c : power2_) {
    if (c >= k) throw FormatError("format error: powermap2 index out of range");
  }
  if (irreps_.size() != k) throw ComputationError("verification failed: irrep count differs from class count");
  for (const auto& ch : irreps_) {
    if (ch.values.size() != k) throw FormatError("format error: character length mismatch");
  }
  derive();
}

void CharacterTable::derive() {
  const std::size_t k = sizes_.size();
  std::vector<std::vector<Cyclotomic>> conj(irreps_.size());
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    for (const auto& v : irreps_[i].values) conj[i].push_back(v.conjugate());
  }
  inverse_.assign(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t c2 = 0; c2 < k && inverse_[c] == k; ++c2) {
      if (sizes_[c2] != sizes_[c]) continue;
      bool match = true;
      for (std::size_t i = 0; i < irreps_.size(); ++i) {
        if (!(conj[i][c] == irreps_[i].values[c2])) {
          match = false;
          break;
        }
      }
      if (match) inverse_[c] = c2;
    }
    if (inverse_[c] == k) throw ComputationError("verification failed: no inverse class");
  }
  dual_.assign(irreps_.size(), irreps_.size());
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    for (std::size_t j = 0; j < irreps_.size(); ++j) {
      if (std::equal(conj[i].begin(), conj[i].end(), irreps_[j].values.begin())) {
        dual_[i] = j;
        break;
      }
    }
    if (dual_[i] == irreps_.size()) throw ComputationError("verification failed: no dual irrep");
  }
  trivial_ = irreps_.size();
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    const auto& v = irreps_[i].values;
    if (std::all_of(v.begin(), v.end(), [](const Cyclotomic& x) { return x == Cyclotomic(1); })) {
      trivial_ = i;
      break;
    }
  }
  if (trivial_ == irreps_.size()) throw ComputationError("verification failed: no trivial character");
  fs_ = fs_indicators(*this);
}

void CharacterTable::attach(std::shared_ptr<const GroupTable> g, ConjugacyData cd) {
  if (cd.inverse_class != inverse_) throw ComputationError("verification failed: inverse classes disagree");
  group_ = std::move(g);
  conjugacy_ = std::move(cd);
}

void verify_row_orthogonality(const BigInt& order, const std::vector<BigInt>& sizes,
                              const std::vector<Character>& irreps) {
  const std::size_t k = sizes.size();
  BigInt total = 0;
  for (const auto& s : sizes) total += s;
  if (total != order) throw ComputationError("verification failed: class sizes do not sum to the order");
  const BigRational inv_order(BigInt(1), order);
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    std::vector<Cyclotomic> conj;
    conj.reserve(k);
    for (const auto& v : irreps[i].values) conj.push_back(v.conjugate());
    for (std::size_t j = 0; j <= i; ++j) {
      CyclotomicSum sum;
      for (std::size_t c = 0; c < k; ++c) sum.add((irreps[j].values[c] * conj[c]) * BigRational(sizes[c]));
      Cyclotomic acc = sum.total() * inv_order;
      if (!(acc == Cyclotomic(i == j ? 1 : 0))) throw ComputationError("verification failed: row orthogonality");
    }
  }
}

void CharacterTable::verify_orthogonality(bool columns) const {
  verify_row_orthogonality(order_, sizes_, irreps_);
  if (!columns) return;
  const std::size_t k = sizes_.size();
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t c2 = 0; c2 <= c; ++c2) {
      CyclotomicSum sum;
      for (const auto& ch : irreps_) sum.add(ch.values[c2] * ch.values[c].conjugate());
      const Cyclotomic acc = sum.total();
      const Cyclotomic want = c == c2 ? Cyclotomic(BigRational(order_ / sizes_[c])) : Cyclotomic(0);
      if (!(acc == want)) throw ComputationError("verification failed: column orthogonality");
    }
  }
}

bool CharacterTable::operator==(const CharacterTable& o) const {
  if (order_ != o.order_ || exponent_ != o.exponent_ || sizes_ != o.sizes_ || power2_ != o.power2_) return false;
  if (irreps_.size() != o.irreps_.size()) return false;
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    if (irreps_[i].degree != o.irreps_[i].degree) return false;
    for (std::size_t c = 0; c < irreps_[i].values.size(); ++c) {
      if (!(irreps_[i].values[c] == o.irreps_[i].values[c])) return false;
    }
  }
  return true;
}

CharacterTable character_table(const GroupTable& g) {
  const std::size_t n = g.order();
  const u64 e = g.exponent();
  const auto primes = primes_up_to(e);
  std::vector<std::int64_t> powers(primes.begin(), primes.end());
  ConjugacyData cd = conjugacy_data(g, powers);
  const std::size_t k = cd.class_count();
  const u64 p = dixon_prime(e, n);

  // Common eigenvectors of all class matrices.
  std::vector<Subspace> spaces(1);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<u64> v(k, 0);
    v[i] = 1;
    spaces[0].basis.push_back(std::move(v));
    spaces[0].pivots.push_back(i);
  }
  ClassMatrices cm(g, cd);
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
    const auto m = cm.matrix(j);
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, m, k, p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw ComputationError("verification failed: eigenspaces did not split");

  // Powers of each class representative, as classes.
  std::vector<std::vector<std::size_t>> power_chain(k, std::vector<std::size_t>(e));
  for (std::size_t i = 0; i < k; ++i) {
    Element x = 0;
    for (u64 t = 0; t < e; ++t) {
      power_chain[i][t] = cd.class_of[x];
      x = g.mul(x, cd.reps[i]);
    }
  }
  const u64 omega = powmod(primitive_root(p), (p - 1) / e, p);
  const u64 omega_inv = invmod(omega, p);
  const u64 e_inv = invmod(e % p, p);
  u64 sqrt_bound = 0;
  while ((sqrt_bound + 1) * (sqrt_bound + 1) <= n) ++sqrt_bound;

  std::vector<Character> irreps;
  for (const auto& s : spaces) {
    std::vector<u64> w = s.basis[0];
    if (w[0] == 0) throw ComputationError("verification failed: eigenvector vanishes at the identity");
    const u64 scale = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, scale, p);

    u64 sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      sum = (sum + mulmod(mulmod(w[i], w[cd.inverse_class[i]], p), invmod(cd.sizes[i] % p, p), p)) % p;
    }
    const u64 deg_sq = mulmod(n % p, invmod(sum, p), p);
    u64 d = 0;
    for (u64 c = 1; c <= sqrt_bound; ++c) {
      if (mulmod(c, c, p) == deg_sq) {
        d = c;
        break;
      }
    }
    if (d == 0 || n % d != 0) throw ComputationError("verification failed: degree recovery");

    std::vector<u64> chi_p(k);
    for (std::size_t i = 0; i < k; ++i) chi_p[i] = mulmod(mulmod(w[i], d, p), invmod(cd.sizes[i] % p, p), p);

    Character ch;
    ch.degree = d;
    ch.values.reserve(k);
    std::vector<u64> omega_pow(e);
    omega_pow[0] = 1;
    for (u64 t = 1; t < e; ++t) omega_pow[t] = mulmod(omega_pow[t - 1], omega_inv, p);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<BigInt> coeffs(e);
      for (u64 kk = 0; kk < e; ++kk) {
        u64 acc = 0;
        for (u64 t = 0; t < e; ++t) {
          acc = (acc + mulmod(chi_p[power_chain[i][t]], omega_pow[(kk * t) % e], p)) % p;
        }
        acc = mulmod(acc, e_inv, p);
        if (acc > d) throw ComputationError("verification failed: eigenvalue multiplicity out of range");
        coeffs[kk] = to_big(acc);
      }
      ch.values.push_back(Cyclotomic::from_powers(e, coeffs));
    }
    irreps.push_back(std::move(ch));
  }

  std::vector<std::pair<std::pair<u64, std::vector<std::string>>, std::size_t>> keys;
  for (std::size_t i = 0; i < irreps.size(); ++i) keys.push_back({{irreps[i].degree, irreps[i].serialized_values()}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<Character> sorted;
  for (auto& [key, idx] : keys) sorted.push_back(std::move(irreps[idx]));

  BigInt deg_sum = 0;
  for (const auto& ch : sorted) {
    if (!(ch.values[0] == Cyclotomic(static_cast<std::int64_t>(ch.degree)))) {
      throw ComputationError("verification failed: value at identity is not the degree");
    }
    for (const auto& v : ch.values) {
      if (!v.is_integral()) throw ComputationError("verification failed: non-integral character value");
    }
    deg_sum += to_big(ch.degree) * to_big(ch.degree);
  }
  if (deg_sum != to_big(n)) throw ComputationError("verification failed: sum of squared degrees");

  std::vector<BigInt> sizes;
  for (auto s : cd.sizes) sizes.push_back(to_big(s));
  CharacterTable t(to_big(n), to_big(e), std::move(sizes), cd.power(2), std::move(sorted));
  t.verify_orthogonality(true);
  t.attach(std::make_shared<const GroupTable>(g), std::move(cd));
  return t;
}

IndicatorData fs_indicators(const CharacterTable& t) {
  const std::size_t k = t.class_count();
  const BigRational inv_order(BigInt(1), t.order());
  IndicatorData out;
  for (const auto& ch : t.irreps()) {
    CyclotomicSum sum;
    for (std::size_t c = 0; c < k; ++c) sum.add(ch.values[t.power2()[c]] * BigRational(t.class_sizes()[c]));
    const Cyclotomic acc = sum.total() * inv_order;
    if (!acc.is_rational() || acc.to_rational().get_den() != 1) {
      throw ComputationError("verification failed: non-integral indicator");
    }
    const BigInt s = acc.to_integer();
    if (s < -1 || s > 1) throw ComputationError("verification failed: indicator out of range");
    out.sigma.push_back(static_cast<int>(s.get_si()));
  }
  BigInt weighted = 0;
  for (std::size_t c = 0; c < k; ++c) {
    Cyclotomic acc;
    for (std::size_t i = 0; i < t.irrep_count(); ++i) {
      if (out.sigma[i] == 0) continue;
      acc += t.irrep(i).values[c] * BigRational(out.sigma[i]);
    }
    if (!acc.is_rational() || acc.to_rational().get_den() != 1) {
      throw ComputationError("verification failed: non-integral square-root count");
    }
    BigInt r = acc.to_integer();
    if (r < 0) throw ComputationError("verification failed: negative square-root count");
    weighted += r * t.class_sizes()[c];
    if (c == 0 || r > out.r_max) out.r_max = r;
    out.r.push_back(std::move(r));
  }
  if (weighted != t.order()) throw ComputationError("verification failed: square-root counts do not sum to the order");
  return out;
}

std::uint64_t dim_fixed_space(const CharacterTable& t, std::size_t irrep, const SubgroupSpec& k) {
  const ConjugacyData* cd = t.conjugacy();
  if (cd == nullptr) throw GroupError("dim_fixed_space needs a table computed from a group");
  const auto& ch = t.irrep(irrep);
  Cyclotomic acc;
  for (Element x : k.elements) acc += ch.values[cd->class_of.at(x)];
  acc *= BigRational(BigInt(1), to_big(k.order()));
  if (!acc.is_rational() || acc.to_rational().get_den() != 1) {
    throw ComputationError("verification failed: non-integral fixed-space dimension");
  }
  const BigInt v = acc.to_integer();
  if (v < 0) throw ComputationError("verification failed: negative fixed-space dimension");
  return v.get_ui();
}

}  // namespace kronhecke
