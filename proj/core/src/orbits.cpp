#include "kronhecke/orbits.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kronhecke/error.hpp"

namespace kronhecke {

std::vector<Element> greedy_generators(const GroupTable& g) {
  std::vector<Element> gens;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<Element> members{0};
  for (Element x = 1; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    // Close under right multiplication by every generator.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element s : gens) {
        const Element y = g.mul(members[i], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

OrbitPartition simultaneous_classes(const GroupTable& g, std::uint32_t d, std::uint64_t cap) {
  if (d == 0) throw Error("d must be positive");
  const std::uint64_t n = g.order();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (total > cap / n) throw CapExceeded("orbit space |G|^" + std::to_string(d) + " exceeds cap");
    total *= n;
  }
  if (total > cap) throw CapExceeded("orbit space exceeds cap");

  const auto gens = greedy_generators(g);
  std::vector<std::vector<Element>> conj;
  for (Element s : gens) {
    std::vector<Element> c(n);
    for (Element x = 0; x < n; ++x) c[x] = g.conj(s, x);
    conj.push_back(std::move(c));
  }

  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> orbit_of(total, kUnseen);
  std::vector<std::uint64_t> queue;
  std::vector<Element> digits(d);
  OrbitPartition out;
  out.d = d;

  auto decode = [&](std::uint64_t code) {
    for (std::uint32_t i = d; i-- > 0;) {
      digits[i] = static_cast<Element>(code % n);
      code /= n;
    }
  };

  for (std::uint64_t start = 0; start < total; ++start) {
    if (orbit_of[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(out.reps.size());
    decode(start);
    out.reps.push_back(digits);
    orbit_of[start] = id;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      decode(queue[qi]);
      for (const auto& c : conj) {
        std::uint64_t code = 0;
        for (std::uint32_t i = 0; i < d; ++i) code = code * n + c[digits[i]];
        if (orbit_of[code] == kUnseen) {
          orbit_of[code] = id;
          queue.push_back(code);
        }
      }
    }
    if (n % queue.size() != 0) throw ComputationError("verification failed: orbit size does not divide |G|");
    out.sizes.push_back(queue.size());
  }

  out.orbit_count = out.reps.size();
  for (std::uint32_t id = 0; id < out.orbit_count; ++id) {
    std::uint64_t code = 0;
    for (Element x : out.reps[id]) code = code * n + g.inv(x);
    const bool real = orbit_of[code] == id;
    out.real_flags.push_back(real);
    if (real) ++out.real_orbit_count;
  }
  return out;
}

DiagonalEmbedding diagonal_subgroup(const GroupTable& g, std::uint32_t d, std::size_t order_cap) {
  if (d == 0) throw Error("d must be positive");
  DiagonalEmbedding out{direct_power(g, d + 1, order_cap), {}};
  std::vector<Element> diag;
  for (Element x = 0; x < g.order(); ++x) {
    std::uint64_t code = 0;
    for (std::uint32_t i = 0; i <= d; ++i) code = code * g.order() + x;
    diag.push_back(static_cast<Element>(code));
  }
  out.diagonal = make_subgroup(out.power, std::move(diag));
  return out;
}

DoubleCosetDecomposition double_cosets(const GroupTable& g, const SubgroupSpec& k) {
  DoubleCosetDecomposition out;
  out.k = k;
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false), mark(n, false);
  std::uint64_t total = 0;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Element> members;
    for (Element a : k.elements) {
      const Element ax = g.mul(a, x);
      for (Element b : k.elements) {
        const Element y = g.mul(ax, b);
        if (!mark[y]) {
          mark[y] = true;
          members.push_back(y);
        }
      }
    }
    std::uint64_t meet = 0;  // |K ∩ x K x^{-1}|
    for (Element b : k.elements) {
      if (k.contains(g.conj(x, b))) ++meet;
    }
    const std::uint64_t expect = static_cast<std::uint64_t>(k.order()) * k.order() / meet;
    if (members.size() != expect) throw ComputationError("verification failed: double coset size");
    const bool self_inverse = mark[g.inv(x)];
    for (Element y : members) {
      seen[y] = true;
      mark[y] = false;
    }
    out.cosets.push_back({x, members.size(), self_inverse});
    if (self_inverse) ++out.self_inverse_count;
    total += members.size();
  }
  if (total != n) throw ComputationError("verification failed: double cosets do not cover G");
  return out;
}

std::uint64_t frame_pair_count(const GroupTable& g, const SubgroupSpec& k) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset(n, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Element a : k.elements) coset[g.mul(a, x)] = id;
  }
  std::uint64_t pairs = 0;
  for (std::uint32_t id = 0; id < reps.size(); ++id) {
    for (Element h = 0; h < n; ++h) {
      if (coset[g.mul(reps[id], g.mul(h, h))] == id) ++pairs;
    }
  }
  if (pairs % n != 0) throw ComputationError("verification failed: non-integral frame pair count");
  return pairs / n;
}

bool gelfand_symmetric_check(const GroupTable& g, const SubgroupSpec& k) {
  const auto dc = double_cosets(g, k);
  return dc.self_inverse_count == dc.cosets.size();
}

}  // namespace kronhecke
