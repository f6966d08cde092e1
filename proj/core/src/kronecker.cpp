#include "kronhecke/kronecker.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include "kronhecke/error.hpp"

namespace kronhecke {

namespace {

BigInt exact_integer(const Cyclotomic& v, const char* what) {
  if (!v.is_rational() || v.to_rational().get_den() != 1) {
    throw ComputationError(std::string("verification failed: non-integral ") + what);
  }
  return v.to_integer();
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  if (num % den != 0) throw ComputationError(std::string("verification failed: non-integral ") + what);
  return num / den;
}

// Uses the caller's tensor when given, otherwise builds one.
struct TensorRef {
  std::unique_ptr<FusionTensor> owned;
  const FusionTensor* ptr;
  TensorRef(const CharacterTable& t, const FusionTensor* given)
      : owned(given ? nullptr : std::make_unique<FusionTensor>(t)), ptr(given ? given : owned.get()) {}
  const FusionTensor& operator*() const { return *ptr; }
};

int sigma_product(const CharacterTable& t, const std::vector<std::size_t>& tuple) {
  int s = 1;
  for (auto v : tuple) s *= t.indicators().sigma[v];
  return s;
}

}  // namespace

void CountReport::add(std::string formula, BigInt value) { values.emplace_back(std::move(formula), std::move(value)); }

const BigInt* CountReport::find(const std::string& formula) const {
  for (const auto& [name, v] : values) {
    if (name == formula) return &v;
  }
  return nullptr;
}

bool CountReport::agree() const {
  if (values.empty()) return false;
  return std::all_of(values.begin(), values.end(),
                     [&](const auto& kv) { return kv.second >= 0 && kv.second == values.front().second; });
}

KroneckerResult kronecker(const CharacterTable& t, const std::vector<std::size_t>& tuple) {
  if (tuple.size() < 2) throw Error("kronecker needs at least two irreps");
  for (auto v : tuple) {
    if (v >= t.irrep_count()) throw Error("irrep index out of range");
  }
  CyclotomicSum sum;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    Cyclotomic prod = t.irrep(tuple[0]).values[c];
    for (std::size_t i = 1; i < tuple.size(); ++i) prod *= t.irrep(tuple[i]).values[c];
    sum.add(prod * BigRational(t.class_sizes()[c]));
  }
  BigInt value = exact_integer(sum.total() * BigRational(BigInt(1), t.order()), "Kronecker coefficient");
  if (value < 0) throw ComputationError("verification failed: negative Kronecker coefficient");
  return {tuple, std::move(value)};
}

FusionTensor::FusionTensor(const CharacterTable& t) : k_(t.irrep_count()), n_(k_ * k_ * k_, 0) {
  for (std::size_t i = 0; i < k_; ++i) dual_.push_back(t.dual(i));
  const BigRational inv_order(BigInt(1), t.order());
  const std::size_t classes = t.class_count();
  std::vector<Cyclotomic> weighted(classes);
  for (std::size_t u = 0; u < k_; ++u) {
    for (std::size_t v = u; v < k_; ++v) {
      for (std::size_t c = 0; c < classes; ++c) {
        weighted[c] = t.irrep(u).values[c] * t.irrep(v).values[c] * BigRational(t.class_sizes()[c]);
      }
      for (std::size_t w = 0; w < k_; ++w) {
        CyclotomicSum sum;
        for (std::size_t c = 0; c < classes; ++c) sum.add(weighted[c] * t.irrep(w).values[c]);
        const BigInt value = exact_integer(sum.total() * inv_order, "Kronecker coefficient");
        if (value < 0 || value > std::numeric_limits<std::uint32_t>::max()) {
          throw ComputationError("verification failed: Kronecker coefficient out of range");
        }
        const auto x = static_cast<std::uint32_t>(value.get_ui());
        n_[(u * k_ + v) * k_ + w] = x;
        n_[(v * k_ + u) * k_ + w] = x;
        max_ = std::max(max_, x);
      }
    }
  }
}

std::vector<std::uint64_t> FusionTensor::product(std::size_t u, std::size_t v) const {
  std::vector<std::uint64_t> out(k_);
  for (std::size_t w = 0; w < k_; ++w) out[w] = (*this)(u, v, dual_[w]);
  return out;
}

std::uint64_t FusionTensor::contract(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() < 2) throw Error("contraction needs at least two irreps");
  std::vector<std::uint64_t> m(k_, 0);
  m.at(tuple[0]) = 1;
  for (std::size_t i = 1; i + 1 < tuple.size(); ++i) {
    std::vector<std::uint64_t> next(k_, 0);
    for (std::size_t x = 0; x < k_; ++x) {
      if (m[x] == 0) continue;
      const auto p = product(x, tuple[i]);
      for (std::size_t w = 0; w < k_; ++w) next[w] += m[x] * p[w];
    }
    m = std::move(next);
  }
  return m[dual_.at(tuple.back())];
}

BigInt burnside_count(const CharacterTable& t, std::uint32_t d) {
  BigInt total = 0;
  for (const auto& s : t.class_sizes()) {
    BigInt centralizer = t.order() / s;
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), centralizer.get_mpz_t(), d);
    total += s * p;
  }
  return exact_quotient(total, t.order(), "Burnside count");
}

BigInt r_moment(const CharacterTable& t, std::uint32_t d) {
  const auto& r = t.indicators().r;
  BigInt total = 0;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), r[c].get_mpz_t(), d + 1);
    total += t.class_sizes()[c] * p;
  }
  return exact_quotient(total, t.order(), "square-root moment");
}

CountReport conj_count(const CharacterTable& t, std::uint32_t d, bool with_kappa, const FusionTensor* tensor) {
  if (d == 0) throw Error("d must be positive");
  CountReport rep;
  rep.quantity = "conj_d";
  rep.d = d;
  rep.add("burnside", burnside_count(t, d));
  if (with_kappa && d <= kMaxKappaArity) {
    TensorRef n(t, tensor);
    BigInt sum = 0;
    for_each_kappa(*n, t, d, [&](const std::vector<std::size_t>&, std::uint64_t kappa) {
      sum += to_big(kappa * kappa);
      return true;
    });
    rep.add("kappa_sq", std::move(sum));
  } else {
    rep.notes.push_back("kappa_sq skipped");
  }
  return rep;
}

CountReport rconj_count(const CharacterTable& t, std::uint32_t d, bool with_kappa, const FusionTensor* tensor) {
  if (d == 0) throw Error("d must be positive");
  CountReport rep;
  rep.quantity = "rconj_d";
  rep.d = d;
  rep.add("r_moment", r_moment(t, d));
  if (with_kappa && d <= kMaxKappaArity) {
    TensorRef n(t, tensor);
    BigInt sum = 0;
    for_each_kappa(*n, t, d, [&](const std::vector<std::size_t>& tuple, std::uint64_t kappa) {
      if (kappa) sum += BigInt(sigma_product(t, tuple)) * to_big(kappa);
      return true;
    });
    rep.add("sigma_weighted", std::move(sum));
  } else {
    rep.notes.push_back("sigma_weighted skipped");
  }
  return rep;
}

TupleCheck is_mftp(const CharacterTable& t, std::uint32_t d, const FusionTensor* tensor) {
  if (d == 0) throw Error("d must be positive");
  TensorRef n(t, tensor);
  TupleCheck out;
  for_each_kappa(*n, t, d, [&](const std::vector<std::size_t>& tuple, std::uint64_t kappa) {
    if (kappa < 2) return true;
    out.holds = false;
    out.witness = KroneckerResult{tuple, to_big(kappa)};
    out.reason = "kappa >= 2";
    return false;
  });
  return out;
}

TupleCheck is_d_real_char(const CharacterTable& t, std::uint32_t d, const FusionTensor* tensor) {
  if (d == 0) throw Error("d must be positive");
  TensorRef n(t, tensor);
  TupleCheck out;
  for_each_kappa(*n, t, d, [&](const std::vector<std::size_t>& tuple, std::uint64_t kappa) {
    if (kappa >= 2) {
      out.reason = "kappa >= 2";
    } else if (kappa == 1 && sigma_product(t, tuple) != 1) {
      out.reason = "sigma product != 1";
    } else {
      return true;
    }
    out.holds = false;
    out.witness = KroneckerResult{tuple, to_big(kappa)};
    return false;
  });
  return out;
}

ClassificationResult classify(const CharacterTable& t, const FusionTensor* tensor) {
  TensorRef n(t, tensor);
  ClassificationResult out;
  const auto& inv = t.inverse_class();
  out.real = true;
  for (std::size_t c = 0; c < inv.size(); ++c) out.real = out.real && inv[c] == c;
  std::map<std::uint32_t, TupleCheck> mftp, dreal;
  for (std::uint32_t d : {2u, 3u}) {
    mftp[d] = is_mftp(t, d, n.ptr);
    out.mftp[d] = mftp[d].holds;
  }
  for (std::uint32_t d : {1u, 2u, 3u}) {
    dreal[d] = is_d_real_char(t, d, n.ptr);
    out.d_real[d] = dreal[d].holds;
  }
  out.doubly_real = out.d_real[2];
  // Preference: a d = 2 multiplicity, then a d = 2 sign failure, then d = 3.
  for (const TupleCheck* c : {&mftp[2], &dreal[2], &mftp[3]}) {
    if (!c->holds) {
      out.witness = c->witness;
      out.witness_reason = c->reason;
      break;
    }
  }
  return out;
}

CountReport frame_verify(const CharacterTable& t, const SubgroupSpec& k) {
  CountReport rep;
  rep.quantity = "frame";
  BigInt sum = 0;
  for (std::size_t i = 0; i < t.irrep_count(); ++i) {
    const int s = t.indicators().sigma[i];
    if (s != 0) sum += BigInt(s) * to_big(dim_fixed_space(t, i, k));
  }
  rep.add("sigma_dim", std::move(sum));
  return rep;
}

CountReport hecke_dim_verify(const CharacterTable& t, const SubgroupSpec& k) {
  CountReport rep;
  rep.quantity = "hecke_dim";
  BigInt sum = 0;
  for (std::size_t i = 0; i < t.irrep_count(); ++i) {
    const auto m = to_big(dim_fixed_space(t, i, k));
    sum += m * m;
  }
  rep.add("dim_sq", std::move(sum));
  return rep;
}

GelfandCheck easy_gelfand_verify(const CharacterTable& t, const SubgroupSpec& k, bool symmetric) {
  GelfandCheck out;
  out.symmetric = symmetric;
  out.character_side = true;
  for (std::size_t i = 0; i < t.irrep_count(); ++i) {
    const auto m = dim_fixed_space(t, i, k);
    if (m > 1 || (m == 1 && t.indicators().sigma[i] != 1)) {
      out.character_side = false;
      break;
    }
  }
  out.holds = out.symmetric == out.character_side;
  return out;
}

CombinatorialProfile combinatorial_profile(const CharacterTable& t, const FusionTensor* tensor) {
  CombinatorialProfile out;
  if (!t.order().fits_ulong_p()) return out;
  const std::uint64_t order = t.order().get_ui();

  std::map<std::uint64_t, std::uint64_t> centralizers;  // centralizer order -> element count
  std::uint64_t z = 0;
  for (const auto& s : t.class_sizes()) {
    const std::uint64_t size = s.get_ui();
    centralizers[order / size] += size;
    if (size == 1) ++z;
  }
  std::map<std::uint64_t, std::uint64_t> degrees;
  for (const auto& ch : t.irreps()) ++degrees[ch.degree];

  for (std::uint64_t q = 3; q <= order; ++q) {
    if (order % q) continue;
    const std::uint64_t a = order / q;
    if (z >= a || (a - z) % q) continue;
    std::map<std::uint64_t, std::uint64_t> want_c;
    want_c[order] += z;
    want_c[a] += a - z;
    want_c[z * q] += a * (q - 1);
    std::map<std::uint64_t, std::uint64_t> want_d;
    want_d[1] += z * q;
    want_d[q] += (a - z) / q;
    std::erase_if(want_c, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(want_d, [](const auto& kv) { return kv.second == 0; });
    if (want_c == centralizers && want_d == degrees) {
      out.matched = true;
      out.z = z;
      out.a = a;
      out.q = q;
      break;
    }
  }
  if (out.matched && is_mftp(t, 2, tensor).holds) {
    throw ComputationError("verification failed: combinatorial profile matched but tensor products are multiplicity free");
  }
  return out;
}

SignLawReport sign_law_check(const CharacterTable& t, const FusionTensor* tensor) {
  TensorRef n(t, tensor);
  SignLawReport out;
  const auto& sigma = t.indicators().sigma;
  const std::size_t k = t.irrep_count();
  for (std::size_t u = 0; u < k; ++u) {
    if (sigma[u] == 0) continue;
    for (std::size_t v = 0; v < k; ++v) {
      if (sigma[v] == 0) continue;
      for (std::size_t w = 0; w < k; ++w) {
        if (sigma[w] == 0 || (*n)(u, v, w) != 1) continue;
        ++out.triples;
        if (sigma[u] * sigma[v] != sigma[w]) out.violations.push_back({u, v, w});
      }
    }
  }
  return out;
}

std::optional<KroneckerResult> higher_hecke_witness(const CharacterTable& t) {
  for (std::size_t i = 0; i < t.irrep_count(); ++i) {
    if (t.irrep(i).degree >= 2) {
      const std::size_t dual = t.dual(i);
      return kronecker(t, {i, dual, dual, i});
    }
  }
  return std::nullopt;
}

}  // namespace kronhecke
