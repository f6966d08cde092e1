#include "kronhecke/zoo.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "kronhecke/error.hpp"

namespace kronhecke::zoo {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kNames{{
    {Family::cyclic, "cyclic"},
    {Family::abelian, "abelian"},
    {Family::symmetric, "symmetric"},
    {Family::alternating, "alternating"},
    {Family::generalized_dihedral, "generalized_dihedral"},
    {Family::generalized_quaternion, "generalized_quaternion"},
    {Family::heisenberg, "heisenberg"},
    {Family::extraspecial2, "extraspecial2"},
    {Family::gl2, "gl2"},
    {Family::psl2, "psl2"},
    {Family::frobenius, "frobenius"},
    {Family::heisenberg_odd_p3, "heisenberg_odd_p3"},
}};

void require(bool ok, const FamilySpec& spec, const std::string& what) {
  if (!ok) throw GroupError(spec.describe() + ": " + what);
}

void require_cap(std::uint64_t order, std::size_t cap) {
  if (order > cap)
    throw CapExceeded("group too large: order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(cap));
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > (std::uint64_t{1} << 40)) return r;  // saturates well above any cap
    r *= b;
  }
  return r;
}

std::vector<Element> inversion_map(const GroupTable& a) {
  return {a.inverses().begin(), a.inverses().end()};
}

std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), Element{0});
  return id;
}

Element unique_central_involution(const GroupTable& g) {
  auto z = g.center();
  if (z.size() != 2) throw GroupError("expected a center of order 2");
  return z[1];
}

GroupTable generalized_dihedral(const std::vector<std::int64_t>& factors, std::size_t cap) {
  const GroupTable a = abelian_group(factors);
  const GroupTable c2 = cyclic_group(2);
  return semidirect_product(a, c2, {identity_map(a.order()), inversion_map(a)}, cap);
}

Element unique_involution(const GroupTable& a) {
  std::vector<Element> invols;
  for (Element x = 1; x < a.order(); ++x)
    if (a.mul(x, x) == 0) invols.push_back(x);
  if (invols.size() != 1) throw GroupError("no unique order-2 element");
  return invols.front();
}

GroupTable generalized_quaternion(const std::vector<std::int64_t>& factors, std::size_t cap) {
  const GroupTable a = abelian_group(factors);
  const Element z = unique_involution(a);
  const GroupTable c4 = cyclic_group(4);
  const auto id = identity_map(a.order());
  const auto inv = inversion_map(a);
  const GroupTable big = semidirect_product(a, c4, {id, inv, id, inv}, 2 * cap);
  // z is identified with s^2: quotient by <(z, s^2)>.
  const std::array<Element, 1> seed{static_cast<Element>(z * 4 + 2)};
  const SubgroupSpec n = subgroup_closure(big, seed);
  auto q = quotient_group(big, n);
  require_cap(q.group.order(), cap);
  return std::move(q.group);
}

GroupTable heisenberg(std::int64_t n, std::uint32_t q, std::size_t cap) {
  const FiniteField f = make_field(q);
  const std::uint64_t qn = ipow(q, static_cast<std::uint64_t>(n));
  const std::uint64_t order = qn * qn * q;
  require_cap(order, cap);
  const auto dim = static_cast<std::size_t>(n);
  // coordinates of every vector code
  std::vector<std::vector<std::uint32_t>> coords(qn, std::vector<std::uint32_t>(dim));
  for (std::uint64_t c = 0; c < qn; ++c) {
    std::uint64_t x = c;
    for (std::size_t i = 0; i < dim; ++i, x /= q) coords[c][i] = static_cast<std::uint32_t>(x % q);
  }
  auto vec_add = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (std::size_t i = dim; i-- > 0;) r = r * q + f.add(coords[a][i], coords[b][i]);
    return r;
  };
  auto dot = [&](std::uint64_t a, std::uint64_t b) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < dim; ++i) s = f.add(s, f.mul(coords[a][i], coords[b][i]));
    return s;
  };
  const auto ord = static_cast<std::size_t>(order);
  std::vector<Element> mul(ord * ord);
  for (std::size_t u = 0; u < ord; ++u) {
    const std::uint64_t ux = u / (qn * q), uy = (u / q) % qn;
    const auto uz = static_cast<std::uint32_t>(u % q);
    for (std::size_t v = 0; v < ord; ++v) {
      const std::uint64_t vx = v / (qn * q), vy = (v / q) % qn;
      const auto vz = static_cast<std::uint32_t>(v % q);
      const std::uint32_t z = f.add(f.add(uz, vz), dot(ux, vy));
      mul[u * ord + v] = static_cast<Element>((vec_add(ux, vx) * qn + vec_add(uy, vy)) * q + z);
    }
  }
  return GroupTable::trusted(ord, std::move(mul));
}

GroupTable matrix_group(const FiniteField& f, const std::vector<std::uint32_t>& codes) {
  const std::uint32_t q = f.q;
  std::vector<std::int64_t> index(static_cast<std::size_t>(q) * q * q * q, -1);
  for (std::size_t i = 0; i < codes.size(); ++i) index[codes[i]] = static_cast<std::int64_t>(i);
  auto entries = [q](std::uint32_t c) {
    return std::array<std::uint32_t, 4>{c / (q * q * q), (c / (q * q)) % q, (c / q) % q, c % q};
  };
  const std::size_t n = codes.size();
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b, c, d] = entries(codes[i]);
    labels.push_back("[" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) +
                     "," + std::to_string(d) + "]");
    for (std::size_t j = 0; j < n; ++j) {
      const auto [e, g, h, k] = entries(codes[j]);
      const std::uint32_t r0 = f.add(f.mul(a, e), f.mul(b, h));
      const std::uint32_t r1 = f.add(f.mul(a, g), f.mul(b, k));
      const std::uint32_t r2 = f.add(f.mul(c, e), f.mul(d, h));
      const std::uint32_t r3 = f.add(f.mul(c, g), f.mul(d, k));
      const auto idx = index[((r0 * q + r1) * q + r2) * q + r3];
      if (idx < 0) throw GroupError("matrix set not closed");
      mul[i * n + j] = static_cast<Element>(idx);
    }
  }
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

std::vector<std::uint32_t> matrices_with_det(const FiniteField& f, bool only_det_one) {
  const std::uint32_t q = f.q;
  const std::uint32_t identity = ((1 * q + 0) * q + 0) * q + 1;
  std::vector<std::uint32_t> codes{identity};
  for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
    if (code == identity) continue;
    const std::uint32_t a = code / (q * q * q), b = (code / (q * q)) % q, c = (code / q) % q,
                        d = code % q;
    const std::uint32_t det = f.sub(f.mul(a, d), f.mul(b, c));
    if (only_det_one ? det == 1 : det != 0) codes.push_back(code);
  }
  return codes;
}

GroupTable frobenius(std::int64_t p, std::int64_t b, std::int64_t q, std::size_t cap) {
  const std::uint64_t pb = ipow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(b));
  require_cap(pb * static_cast<std::uint64_t>(q), cap);
  const FiniteField f = make_field(static_cast<std::uint32_t>(pb));
  const GroupTable additive = GroupTable::trusted(f.q, std::vector<Element>(f.add_table.begin(), f.add_table.end()));
  const std::uint32_t omega = f.pow(f.primitive, (pb - 1) / static_cast<std::uint64_t>(q));
  std::vector<std::vector<Element>> action;
  for (std::int64_t t = 0; t < q; ++t) {
    const std::uint32_t scalar = f.pow(omega, static_cast<std::uint64_t>(t));
    std::vector<Element> phi(f.q);
    for (std::uint32_t x = 0; x < f.q; ++x) phi[x] = f.mul(scalar, x);
    action.push_back(std::move(phi));
  }
  return semidirect_product(additive, cyclic_group(static_cast<std::size_t>(q)), action, cap);
}

GroupTable heisenberg_odd_p3(std::int64_t p, std::int64_t variant, std::size_t cap) {
  require_cap(static_cast<std::uint64_t>(p * p * p), cap);
  const auto up = static_cast<std::uint32_t>(p);
  const GroupTable cp = cyclic_group(up);
  std::vector<std::vector<Element>> action;
  if (variant == 0) {
    const GroupTable a = abelian_group({p, p});
    for (std::uint32_t t = 0; t < up; ++t) {
      std::vector<Element> phi(a.order());
      for (std::uint32_t x = 0; x < up; ++x)
        for (std::uint32_t y = 0; y < up; ++y) phi[x * up + y] = x * up + (y + t * x) % up;
      action.push_back(std::move(phi));
    }
    return semidirect_product(a, cp, action, cap);
  }
  const std::uint32_t m = up * up;
  const GroupTable a = cyclic_group(m);
  std::uint32_t scalar = 1;
  for (std::uint32_t t = 0; t < up; ++t) {
    std::vector<Element> phi(m);
    for (std::uint32_t x = 0; x < m; ++x) phi[x] = static_cast<Element>((std::uint64_t{scalar} * x) % m);
    action.push_back(std::move(phi));
    scalar = (scalar * (1 + up)) % m;
  }
  return semidirect_product(a, cp, action, cap);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [fam, n] : kNames)
    if (n == name) return fam;
  return std::nullopt;
}

std::string FamilySpec::describe() const {
  std::string s(family_name(family));
  s += '[';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(params[i]);
  }
  return s + ']';
}

FamilySpec parse_family(std::string_view name, std::string_view params) {
  auto fam = family_from_name(name);
  if (!fam) throw GroupError("unknown family '" + std::string(name) + "'");
  FamilySpec spec{*fam, {}};
  const char* p = params.data();
  const char* end = p + params.size();
  while (p < end) {
    if (*p == ',' || *p == ' ' || *p == '[' || *p == ']') {
      ++p;
      continue;
    }
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) throw GroupError("bad parameter list '" + std::string(params) + "'");
    spec.params.push_back(v);
    p = next;
  }
  return spec;
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  return GroupTable::trusted(n, std::move(mul));
}

GroupTable abelian_group(const std::vector<std::int64_t>& factors) {
  GroupTable g;
  for (std::size_t i = factors.size(); i-- > 0;) {
    if (factors[i] < 1) throw GroupError("cyclic factor orders must be positive");
    g = direct_product(cyclic_group(static_cast<std::size_t>(factors[i])), g);
  }
  return g;
}

std::vector<Permutation> symmetric_elements(std::size_t n) {
  if (n == 0) throw GroupError("symmetric group degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(n), c(n);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens = {t, c};
  }
  return permutation_closure(n, gens, static_cast<std::size_t>(-1));
}

std::vector<Permutation> alternating_elements(std::size_t n) {
  if (n == 0) throw GroupError("alternating group degree must be positive");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    Permutation g(n);
    std::iota(g.begin(), g.end(), 0u);
    g[0] = 1;
    g[1] = static_cast<std::uint32_t>(i);
    g[i] = 0;
    gens.push_back(std::move(g));
  }
  return permutation_closure(n, gens, static_cast<std::size_t>(-1));
}

std::vector<std::uint32_t> gl2_elements(const FiniteField& f) { return matrices_with_det(f, false); }

GroupTable central_product(const GroupTable& g, const GroupTable& h, Element zg, Element zh,
                           std::size_t order_cap) {
  if (zg >= g.order() || zh >= h.order()) throw GroupError("central element out of range");
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, zg) != g.mul(zg, x)) throw GroupError("elements not central");
  for (Element x = 0; x < h.order(); ++x)
    if (h.mul(x, zh) != h.mul(zh, x)) throw GroupError("elements not central");
  if (g.element_order(zg) != h.element_order(zh)) throw GroupError("central element orders differ");
  if (zg == 0) throw GroupError("central product needs non-trivial central elements");
  const GroupTable prod = direct_product(g, h, order_cap * g.element_order(zg));
  const std::array<Element, 1> seed{static_cast<Element>(zg * h.order() + zh)};
  auto q = quotient_group(prod, subgroup_closure(prod, seed));
  require_cap(q.group.order(), order_cap);
  return std::move(q.group);
}

bool involution_is_square(const std::vector<std::int64_t>& factors) {
  const GroupTable a = abelian_group(factors);
  const Element z = unique_involution(a);
  for (Element x = 0; x < a.order(); ++x)
    if (a.mul(x, x) == z) return true;
  return false;
}

SubgroupSpec point_stabilizer(const std::vector<Permutation>& elements) {
  SubgroupSpec k;
  const std::size_t last = elements.front().size() - 1;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i][last] == last) k.elements.push_back(static_cast<Element>(i));
  return k;
}

SubgroupSpec borel_subgroup(std::uint32_t q) {
  const FiniteField f = make_field(q);
  const auto codes = gl2_elements(f);
  SubgroupSpec k;
  for (std::size_t i = 0; i < codes.size(); ++i)
    if ((codes[i] / q) % q == 0) k.elements.push_back(static_cast<Element>(i));
  return k;
}

GroupTable zoo_build(const FamilySpec& spec, std::size_t order_cap) {
  const auto& p = spec.params;
  auto count = [&](std::size_t n) { require(p.size() == n, spec, "expected " + std::to_string(n) + " parameters"); };
  switch (spec.family) {
    case Family::cyclic:
      count(1);
      require(p[0] >= 1, spec, "order must be positive");
      require_cap(static_cast<std::uint64_t>(p[0]), order_cap);
      return cyclic_group(static_cast<std::size_t>(p[0]));
    case Family::abelian: {
      std::uint64_t n = 1;
      for (auto f : p) {
        require(f >= 1, spec, "factor orders must be positive");
        n *= static_cast<std::uint64_t>(f);
        require_cap(n, order_cap);
      }
      return abelian_group(p);
    }
    case Family::symmetric:
    case Family::alternating: {
      count(1);
      require(p[0] >= 1, spec, "degree must be positive");
      std::uint64_t n = 1;
      for (std::int64_t i = 2; i <= p[0] && n <= order_cap * 2; ++i) n *= static_cast<std::uint64_t>(i);
      if (spec.family == Family::alternating && p[0] >= 2) n /= 2;
      require_cap(n, order_cap);
      const auto n_deg = static_cast<std::size_t>(p[0]);
      return permutation_table(spec.family == Family::symmetric ? symmetric_elements(n_deg)
                                                                : alternating_elements(n_deg));
    }
    case Family::generalized_dihedral: {
      std::uint64_t n = 2;
      for (auto f : p) {
        require(f >= 1, spec, "factor orders must be positive");
        n *= static_cast<std::uint64_t>(f);
        require_cap(n, order_cap);
      }
      return generalized_dihedral(p, order_cap);
    }
    case Family::generalized_quaternion: {
      std::uint64_t n = 2;
      for (auto f : p) {
        require(f >= 1, spec, "factor orders must be positive");
        n *= static_cast<std::uint64_t>(f);
        require_cap(n, order_cap);
      }
      return generalized_quaternion(p, order_cap);
    }
    case Family::heisenberg: {
      count(2);
      require(p[0] >= 1, spec, "n must be positive");
      require(p[1] >= 2 && prime_power(static_cast<std::uint64_t>(p[1])).first != 0, spec,
              "q must be a prime power");
      return heisenberg(p[0], static_cast<std::uint32_t>(p[1]), order_cap);
    }
    case Family::extraspecial2: {
      count(2);
      require(p[0] >= 0 && p[1] >= 0 && p[0] + p[1] >= 1, spec, "need at least one factor");
      require_cap(ipow(2, static_cast<std::uint64_t>(2 * (p[0] + p[1]) + 1)), order_cap);
      const GroupTable d8 = generalized_dihedral({4}, order_cap);
      const GroupTable q8 = generalized_quaternion({4}, order_cap);
      std::vector<const GroupTable*> factors;
      for (std::int64_t i = 0; i < p[0]; ++i) factors.push_back(&d8);
      for (std::int64_t i = 0; i < p[1]; ++i) factors.push_back(&q8);
      GroupTable g = *factors.back();
      for (std::size_t i = factors.size() - 1; i-- > 0;)
        g = central_product(*factors[i], g, unique_central_involution(*factors[i]),
                            unique_central_involution(g), order_cap);
      return g;
    }
    case Family::gl2:
    case Family::psl2: {
      count(1);
      require(p[0] >= 2 && p[0] <= 7 && prime_power(static_cast<std::uint64_t>(p[0])).first != 0,
              spec, "q must be a prime power <= 7");
      const FiniteField f = make_field(static_cast<std::uint32_t>(p[0]));
      const std::uint64_t q = f.q;
      const std::uint64_t gl_order = (q * q - 1) * (q * q - q);
      if (spec.family == Family::gl2) {
        require_cap(gl_order, order_cap);
        return matrix_group(f, gl2_elements(f));
      }
      require_cap(gl_order / (q - 1), order_cap);
      const GroupTable sl = matrix_group(f, matrices_with_det(f, true));
      const std::uint32_t m1 = f.neg(1);
      const std::uint32_t minus_identity = ((m1 * f.q + 0) * f.q + 0) * f.q + m1;
      const auto codes = matrices_with_det(f, true);
      std::vector<Element> centre{0};
      for (std::size_t i = 1; i < codes.size(); ++i)
        if (codes[i] == minus_identity) centre.push_back(static_cast<Element>(i));
      return quotient_group(sl, make_subgroup(sl, centre)).group;
    }
    case Family::frobenius: {
      count(3);
      require(is_prime(static_cast<std::uint64_t>(p[0])), spec, "p must be prime");
      require(p[1] >= 1, spec, "b must be positive");
      require(is_prime(static_cast<std::uint64_t>(p[2])), spec, "q must be prime");
      const std::uint64_t pb = ipow(static_cast<std::uint64_t>(p[0]), static_cast<std::uint64_t>(p[1]));
      require(pb <= kMaxFieldOrder, spec, "p^b above supported field size");
      require((pb - 1) % static_cast<std::uint64_t>(p[2]) == 0, spec, "q must divide p^b - 1");
      return frobenius(p[0], p[1], p[2], order_cap);
    }
    case Family::heisenberg_odd_p3:
      count(2);
      require(p[0] > 2 && is_prime(static_cast<std::uint64_t>(p[0])), spec, "p must be an odd prime");
      require(p[1] == 0 || p[1] == 1, spec, "variant must be 0 or 1");
      return heisenberg_odd_p3(p[0], p[1], order_cap);
  }
  throw GroupError("unhandled family");
}

}  // namespace kronhecke::zoo
