#pragma once

// Brute-force reference computations used only by the tests. Each works
// straight from the multiplication table and shares no code with the library
// beyond GroupTable::mul.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "kronhecke/character_table.hpp"
#include "kronhecke/group_table.hpp"
#include "kronhecke/zoo.hpp"

namespace oracle {

using kronhecke::Element;
using kronhecke::GroupTable;

inline Element inverse(const GroupTable& g, Element x) {
  for (Element y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == 0) return y;
  }
  return 0;
}

inline Element conjugate(const GroupTable& g, Element h, Element x) {
  return g.mul(g.mul(h, x), inverse(g, h));
}

/// Sorted list of conjugacy class sizes.
inline std::vector<std::size_t> class_sizes(const GroupTable& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Element> cls;
    for (Element h = 0; h < g.order(); ++h) cls.insert(conjugate(g, h, x));
    for (Element y : cls) seen[y] = true;
    out.push_back(cls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t element_order(const GroupTable& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

inline std::map<std::size_t, std::size_t> order_census(const GroupTable& g) {
  std::map<std::size_t, std::size_t> out;
  for (Element x = 0; x < g.order(); ++x) ++out[element_order(g, x)];
  return out;
}

/// #{x : x^2 = y}
inline std::uint64_t square_roots(const GroupTable& g, Element y) {
  std::uint64_t n = 0;
  for (Element x = 0; x < g.order(); ++x) n += g.mul(x, x) == y;
  return n;
}

inline std::uint64_t involutions_plus_one(const GroupTable& g) { return square_roots(g, 0); }

struct TupleOrbits {
  std::uint64_t orbits = 0;
  std::uint64_t real_orbits = 0;
};

/// Orbits of simultaneous conjugation on G^d by union-find over every
/// (element, tuple) pair.
inline TupleOrbits tuple_orbits(const GroupTable& g, unsigned d) {
  const std::uint64_t n = g.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= n;
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto image = [&](std::uint64_t code, auto&& f) {
    std::vector<Element> digits(d);
    for (unsigned i = d; i-- > 0;) {
      digits[i] = static_cast<Element>(code % n);
      code /= n;
    }
    std::uint64_t out = 0;
    for (Element x : digits) out = out * n + f(x);
    return out;
  };
  for (Element h = 0; h < n; ++h) {
    for (std::uint64_t c = 0; c < total; ++c) {
      const auto a = find(c), b = find(image(c, [&](Element x) { return conjugate(g, h, x); }));
      if (a != b) parent[a] = b;
    }
  }
  TupleOrbits out;
  for (std::uint64_t c = 0; c < total; ++c) {
    if (find(c) != c) continue;
    ++out.orbits;
  }
  for (std::uint64_t c = 0; c < total; ++c) {
    if (find(c) != c) continue;
    if (find(image(c, [&](Element x) { return inverse(g, x); })) == c) ++out.real_orbits;
  }
  return out;
}

struct DoubleCosetCensus {
  std::size_t count = 0;
  std::size_t self_inverse = 0;
};

inline DoubleCosetCensus double_cosets(const GroupTable& g, const std::vector<Element>& k) {
  std::set<std::set<Element>> all;
  for (Element x = 0; x < g.order(); ++x) {
    std::set<Element> s;
    for (Element a : k)
      for (Element b : k) s.insert(g.mul(g.mul(a, x), b));
    all.insert(s);
  }
  DoubleCosetCensus out;
  out.count = all.size();
  for (const auto& s : all) {
    const Element x = *s.begin();
    out.self_inverse += s.count(inverse(g, x));
  }
  return out;
}

/// Exact character value of irrep i at element x, via the table's class map.
inline const kronhecke::Cyclotomic& value_at(const kronhecke::CharacterTable& t, std::size_t i, Element x) {
  return t.irrep(i).values[t.conjugacy()->class_of[x]];
}

/// (1/|G|) sum over all elements of a product of character values.
inline kronhecke::BigInt elementwise_kappa(const kronhecke::CharacterTable& t, const GroupTable& g,
                                           const std::vector<std::size_t>& tuple) {
  const std::uint64_t e = g.exponent();
  kronhecke::Cyclotomic sum = kronhecke::Cyclotomic::zero(e);
  for (Element x = 0; x < g.order(); ++x) {
    kronhecke::Cyclotomic p(1, e);
    for (auto i : tuple) p *= value_at(t, i, x);
    sum += p;
  }
  const kronhecke::BigRational q = sum.to_rational() / kronhecke::BigRational(static_cast<long>(g.order()));
  return q.get_den() == 1 ? kronhecke::BigInt(q.get_num()) : kronhecke::BigInt(-1);
}

inline kronhecke::GroupTable build(const char* family, const char* params) {
  return kronhecke::zoo::zoo_build(kronhecke::zoo::parse_family(family, params));
}

}  // namespace oracle
