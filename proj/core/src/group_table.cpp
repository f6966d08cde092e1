#include "kronhecke/group_table.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "kronhecke/error.hpp"

namespace kronhecke {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap) throw CapExceeded("group too large: order " + std::to_string(order) +
                                     " exceeds cap " + std::to_string(cap));
}

}  // namespace

GroupTable GroupTable::trusted(std::size_t order, std::vector<Element> mul,
                               std::vector<std::string> labels) {
  if (order == 0 || mul.size() != order * order)
    throw GroupError("table shape does not match order");
  if (!labels.empty() && labels.size() != order) throw GroupError("label count does not match order");
  std::vector<Element> inv(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    if (mul[a] != a || mul[a * order] != a) throw GroupError("no identity");
    bool found = false;
    for (std::size_t b = 0; b < order; ++b) {
      if (mul[a * order + b] == 0) {
        inv[a] = static_cast<Element>(b);
        found = true;
        break;
      }
    }
    if (!found) throw GroupError("missing inverse");
  }
  return GroupTable(order, std::move(mul), std::move(inv), std::move(labels));
}

Element GroupTable::pow(Element a, std::int64_t k) const {
  Element base = k < 0 ? inv_[a] : a;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element result = 0;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::uint64_t GroupTable::exponent() const {
  std::uint64_t e = 1;
  for (Element a = 0; a < order_; ++a) e = std::lcm(e, static_cast<std::uint64_t>(element_order(a)));
  return e;
}

bool GroupTable::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> GroupTable::center() const {
  std::vector<Element> z;
  for (Element a = 0; a < order_; ++a) {
    bool central = true;
    for (Element b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::string GroupTable::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

const std::vector<std::size_t>& ConjugacyData::power(std::int64_t k) const {
  auto it = power_class.find(k);
  if (it == power_class.end()) throw Error("power map " + std::to_string(k) + " not computed");
  return it->second;
}

bool SubgroupSpec::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

GroupTable validate_cayley(const std::vector<std::vector<Element>>& table,
                           std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError("empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw GroupError("table is not square");
    for (auto v : row)
      if (v >= n) throw GroupError("entry out of range");
  }
  if (!labels.empty() && labels.size() != n) throw GroupError("label count does not match order");

  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) id = e;
  }
  if (id == n) throw GroupError("no identity");

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) found = table[x][y] == id && table[y][x] == id;
    if (!found) throw GroupError("missing inverse");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = table[a][b];
      for (std::size_t c = 0; c < n; ++c)
        if (table[ab][c] != table[a][table[b][c]])
          throw GroupError("associativity violated at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
    }

  // Relabel so that the identity sits at index 0.
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::swap(perm[0], perm[id]);
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[perm[a] * n + perm[b]] = perm[table[a][b]];
  if (!labels.empty()) std::swap(labels[0], labels[id]);
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> permutation_closure(std::size_t degree,
                                             const std::vector<Permutation>& gens,
                                             std::size_t order_cap) {
  if (degree == 0) throw GroupError("degree must be positive");
  for (const auto& g : gens) {
    if (g.size() != degree) throw GroupError("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw GroupError("generator is not a bijection");
      hit[v] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next(degree);
      const auto& cur = elements[head];
      for (std::size_t i = 0; i < degree; ++i) next[i] = cur[g[i]];
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
        check_cap(elements.size(), order_cap);
      }
    }
  }
  return elements;
}

GroupTable permutation_table(const std::vector<Permutation>& elements) {
  const std::size_t n = elements.size();
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);
  const std::size_t degree = elements.front().size();
  std::vector<Element> mul(n * n);
  Permutation prod(degree);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < degree; ++i) prod[i] = elements[a][elements[b][i]];
      auto it = index.find(prod);
      if (it == index.end()) throw GroupError("permutation list not closed under composition");
      mul[a * n + b] = static_cast<Element>(it->second);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(cycle_notation(p));
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

GroupTable group_from_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                 std::size_t order_cap) {
  return permutation_table(permutation_closure(degree, gens, order_cap));
}

ConjugacyData conjugacy_data(const GroupTable& g, std::span<const std::int64_t> powers) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ConjugacyData cd;
  cd.class_of.assign(n, kUnset);
  for (Element x = 0; x < n; ++x) {
    if (cd.class_of[x] != kUnset) continue;
    const std::size_t c = cd.reps.size();
    cd.reps.push_back(x);
    std::size_t size = 0;
    for (Element h = 0; h < n; ++h) {
      const Element y = g.conj(h, x);
      if (cd.class_of[y] == kUnset) {
        cd.class_of[y] = c;
        ++size;
      }
    }
    cd.sizes.push_back(size);
    cd.centralizer_orders.push_back(n / size);
  }
  const std::size_t k = cd.reps.size();
  cd.inverse_class.resize(k);
  for (std::size_t c = 0; c < k; ++c) cd.inverse_class[c] = cd.class_of[g.inv(cd.reps[c])];

  std::vector<std::int64_t> wanted(powers.begin(), powers.end());
  wanted.push_back(1);
  wanted.push_back(2);
  for (auto p : wanted) {
    if (cd.power_class.count(p)) continue;
    std::vector<std::size_t> map(k);
    for (std::size_t c = 0; c < k; ++c) map[c] = cd.class_of[g.pow(cd.reps[c], p)];
    cd.power_class.emplace(p, std::move(map));
  }
  return cd;
}

SubgroupSpec subgroup_closure(const GroupTable& g, std::span<const Element> seed) {
  for (auto s : seed)
    if (s >= g.order()) throw GroupError("seed element out of range");
  std::vector<bool> in(g.order(), false);
  std::vector<Element> elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto s : seed) {
      const Element y = g.mul(elems[head], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return SubgroupSpec{std::move(elems)};
}

SubgroupSpec make_subgroup(const GroupTable& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SubgroupSpec k{std::move(elements)};
  if (k.elements.empty() || k.elements.front() != 0) throw GroupError("subgroup lacks identity");
  if (k.elements.back() >= g.order()) throw GroupError("subgroup element out of range");
  for (auto a : k.elements) {
    if (!k.contains(g.inv(a))) throw GroupError("subgroup not closed under inverses");
    for (auto b : k.elements)
      if (!k.contains(g.mul(a, b))) throw GroupError("subgroup not closed under multiplication");
  }
  if (g.order() % k.order() != 0) throw GroupError("subgroup order does not divide group order");
  return k;
}

bool is_normal(const GroupTable& g, const SubgroupSpec& n) {
  for (Element x = 0; x < g.order(); ++x)
    for (auto a : n.elements)
      if (!n.contains(g.conj(x, a))) return false;
  return true;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::size_t order_cap) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  check_cap(n, order_cap);
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<Element>(
          g.mul(static_cast<Element>(a / nh), static_cast<Element>(b / nh)) * nh +
          h.mul(static_cast<Element>(a % nh), static_cast<Element>(b % nh)));
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a)
      labels.push_back("(" + g.label(static_cast<Element>(a / nh)) + "," +
                       h.label(static_cast<Element>(a % nh)) + ")");
  }
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

GroupTable direct_power(const GroupTable& g, std::size_t k, std::size_t order_cap) {
  if (k == 0) throw GroupError("direct power needs k >= 1");
  GroupTable result = g;
  for (std::size_t i = 1; i < k; ++i) result = direct_product(g, result, order_cap);
  return result;
}

GroupTable semidirect_product(const GroupTable& a, const GroupTable& h,
                              const std::vector<std::vector<Element>>& action,
                              std::size_t order_cap) {
  const std::size_t na = a.order(), nh = h.order(), n = na * nh;
  check_cap(n, order_cap);
  if (action.size() != nh) throw GroupError("action not automorphism");
  for (const auto& phi : action) {
    if (phi.size() != na) throw GroupError("action not automorphism");
    std::vector<bool> hit(na, false);
    for (auto v : phi) {
      if (v >= na || hit[v]) throw GroupError("action not automorphism");
      hit[v] = true;
    }
    for (Element x = 0; x < na; ++x)
      for (Element y = 0; y < na; ++y)
        if (phi[a.mul(x, y)] != a.mul(phi[x], phi[y])) throw GroupError("action not automorphism");
  }
  for (Element h1 = 0; h1 < nh; ++h1)
    for (Element h2 = 0; h2 < nh; ++h2) {
      const auto& composite = action[h.mul(h1, h2)];
      for (Element x = 0; x < na; ++x)
        if (composite[x] != action[h1][action[h2][x]]) throw GroupError("action not homomorphism");
    }

  std::vector<Element> mul(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto pa = static_cast<Element>(p / nh), ph = static_cast<Element>(p % nh);
    for (std::size_t q = 0; q < n; ++q) {
      const auto qa = static_cast<Element>(q / nh), qh = static_cast<Element>(q % nh);
      mul[p * n + q] = static_cast<Element>(a.mul(pa, action[ph][qa]) * nh + h.mul(ph, qh));
    }
  }
  std::vector<std::string> labels;
  if (a.has_labels() || h.has_labels()) {
    labels.reserve(n);
    for (std::size_t p = 0; p < n; ++p)
      labels.push_back("(" + a.label(static_cast<Element>(p / nh)) + "," +
                       h.label(static_cast<Element>(p % nh)) + ")");
  }
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

QuotientResult quotient_group(const GroupTable& g, const SubgroupSpec& n) {
  if (!is_normal(g, n)) throw GroupError("subgroup not normal");
  const std::size_t order = g.order();
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> proj(order, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < order; ++x) {
    if (proj[x] != kUnset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto k : n.elements) proj[g.mul(x, k)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Element> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) mul[a * m + b] = proj[g.mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(m);
    for (auto r : reps) labels.push_back(g.label(r) + "N");
  }
  return {GroupTable::trusted(m, std::move(mul), std::move(labels)), std::move(proj)};
}

}  // namespace kronhecke
