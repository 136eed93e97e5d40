#include "friezekit/frieze.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace friezekit {

FriezeAssignment::FriezeAssignment(Seed base, std::vector<RingElement> values)
    : base_(std::move(base)), values_(std::move(values)) {
  if (values_.size() != base_.rank()) {
    throw DomainError("frieze needs " + std::to_string(base_.rank()) + " values, got " +
                      std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v.kind() != values_.front().kind()) throw DomainError("frieze values from different rings");
    if (v.is_zero()) throw DomainError("frieze values must be non-zero");
  }
}

std::optional<RingElement> evaluate_frieze(const FriezeAssignment& f, const LaurentPolynomial& u) {
  return specialize(u, f.values());
}

namespace {

void require_identity_acyclic(const Seed& base) {
  if (!is_acyclic(base.quiver)) {
    throw DomainError("divisibility criterion needs an acyclic base seed");
  }
  if (!base.path.empty()) throw DomainError("divisibility criterion needs the base seed itself");
}

}  // namespace

bool is_frieze_vector_acyclic(const FriezeAssignment& f) {
  require_identity_acyclic(f.base());
  const auto& a = f.values();
  const auto one = RingElement::one(f.ring());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ring_exact_div(exchange_binomial(f.base().quiver, i, a, one), a[i])) return false;
  }
  return true;
}

bool is_frieze_vector_exhaustive(const FriezeAssignment& f, std::size_t limit) {
  if (!f.base().path.empty()) throw DomainError("frieze must be given on the base seed");
  for (const auto& var : distinct_cluster_variables(enumerate_clusters(f.base(), limit))) {
    if (!evaluate_frieze(f, var)) return false;
  }
  return true;
}

std::vector<RingElement> companion_b_vector(const FriezeAssignment& f) {
  if (!is_frieze_vector_acyclic(f)) throw DomainError("not a frieze vector");
  const auto& a = f.values();
  const auto one = RingElement::one(f.ring());
  std::vector<RingElement> b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    b.push_back(*ring_exact_div(exchange_binomial(f.base().quiver, i, a, one), a[i]));
  }
  return b;
}

std::vector<RingElement> to_ring(const FriezeVector& v) {
  std::vector<RingElement> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(RingElement::integer(x));
  return out;
}

namespace {

using i64 = std::int64_t;

// Exchange binomial at i in machine integers; false on overflow.
bool binomial_i64(const Quiver& q, std::size_t i, const std::vector<i64>& a, i64& out) {
  i64 outp = 1, inp = 1;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const int b = q.b(i, j);
    i64& acc = b > 0 ? outp : inp;
    for (int r = 0; r < (b > 0 ? b : -b); ++r) {
      if (__builtin_mul_overflow(acc, a[j], &acc)) return false;
    }
  }
  return !__builtin_add_overflow(outp, inp, &out);
}

bool candidate_passes(const Quiver& q, const std::vector<i64>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    i64 bin = 0;
    if (!binomial_i64(q, i, a, bin)) {
      FriezeVector big(a.begin(), a.end());
      return is_frieze_vector_acyclic(FriezeAssignment(Seed::base(q), to_ring(big)));
    }
    if (bin % a[i] != 0) return false;
  }
  return true;
}

// Lexicographic decoding of a flat index into [1, bound]^n.
void decode(std::uint64_t idx, long bound, std::vector<i64>& a) {
  for (std::size_t k = a.size(); k-- > 0;) {
    a[k] = static_cast<i64>(idx % static_cast<std::uint64_t>(bound)) + 1;
    idx /= static_cast<std::uint64_t>(bound);
  }
}

std::uint64_t box_size(std::size_t n, long bound) {
  if (bound < 1) throw DomainError("bound must be >= 1");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(bound), &total) ||
        total > (std::uint64_t{1} << 40)) {
      throw DomainError("search box too large");
    }
  }
  return total;
}

}  // namespace

std::vector<FriezeVector> enumerate_frieze_vectors_serial(const Seed& base, long bound) {
  require_identity_acyclic(base);
  const std::size_t n = base.rank();
  const std::uint64_t total = box_size(n, bound);
  std::vector<FriezeVector> out;
  std::vector<i64> a(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, bound, a);
    if (candidate_passes(base.quiver, a)) out.emplace_back(a.begin(), a.end());
  }
  return out;
}

std::vector<FriezeVector> enumerate_frieze_vectors(const Seed& base, long bound) {
  require_identity_acyclic(base);
  const std::size_t n = base.rank();
  const std::uint64_t total = box_size(n, bound);
  std::vector<std::uint8_t> hit(total, 0);
  const auto signed_total = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<i64> a(n);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < signed_total; ++idx) {
      decode(static_cast<std::uint64_t>(idx), bound, a);
      hit[static_cast<std::size_t>(idx)] = candidate_passes(base.quiver, a) ? 1 : 0;
    }
  }
  std::vector<FriezeVector> out;
  std::vector<i64> a(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!hit[idx]) continue;
    decode(idx, bound, a);
    out.emplace_back(a.begin(), a.end());
  }
  return out;
}

FriezeVector phi(const Seed& base, const Seed& target) {
  if (!base.path.empty()) throw DomainError("phi needs the base seed itself");
  if (base.quiver.size() != target.quiver.size()) throw DomainError("seeds of different rank");
  const std::vector<RingElement> ones(base.rank(), RingElement::integer(1));
  FriezeVector out;
  for (const auto& l : expand_base_in_current(target)) {
    auto v = specialize(l, ones);
    if (!v || !v->is_positive()) throw InvariantViolation("phi produced a non-positive entry");
    out.push_back(v->as_integer());
  }
  return out;
}

namespace {

// Values of the frieze on each variable of s; throws if one leaves the ring.
std::vector<RingElement> cluster_values(const FriezeAssignment& f, const Seed& s) {
  std::vector<RingElement> out;
  for (const auto& v : s.vars) {
    auto x = evaluate_frieze(f, v);
    if (!x) throw DomainError("values do not define a frieze: " + v.to_string() + " leaves the ring");
    out.push_back(std::move(*x));
  }
  return out;
}

}  // namespace

Seed phi_inverse(const Seed& base, const FriezeVector& a, std::size_t limit) {
  if (!base.path.empty()) throw DomainError("phi_inverse needs the base seed itself");
  for (const auto& x : a) {
    if (x <= 0) throw DomainError("frieze vector entries must be positive");
  }
  FriezeAssignment f(base, to_ring(a));
  std::optional<Seed> hit;
  for (const auto& s : enumerate_clusters(base, limit)) {
    const auto vals = cluster_values(f, s);
    const bool all_one = std::all_of(vals.begin(), vals.end(),
                                     [](const RingElement& v) { return v == RingElement::integer(1); });
    if (!all_one) continue;
    if (hit) throw InvariantViolation("two clusters with all frieze values 1");
    hit = s;
  }
  if (!hit) throw DomainError("no cluster with all values 1: vector is not a positive unitary frieze vector");
  return *hit;
}

UnitarySearch is_unitary(const Seed& base, const std::vector<RingElement>& values, std::size_t limit) {
  if (!base.path.empty()) throw DomainError("is_unitary needs the base seed itself");
  FriezeAssignment f(base, values);
  auto search = explore_clusters(base, limit);
  UnitarySearch out{std::nullopt, 0, search.complete};
  for (const auto& s : search.seeds) {
    ++out.clusters_searched;
    const auto vals = cluster_values(f, s);
    if (std::all_of(vals.begin(), vals.end(), [](const RingElement& v) { return ring_is_unit(v); })) {
      out.cluster = s;
      return out;
    }
  }
  return out;
}

}  // namespace friezekit
