#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "friezekit/cluster.hpp"
#include "friezekit/laurent.hpp"
#include "friezekit/quiver.hpp"
#include "friezekit/rings.hpp"

namespace friezekit {

/// Values of a frieze on consecutive slices of the transjective component.
/// Column c holds the values at vertex k of the slice quiver; column
/// first_column + 1 arises from column first_column by mutating along
/// source_order(quiver).
template <class T>
struct BasicFriezeArray {
  Quiver quiver{1};
  long first_column = 0;
  std::vector<std::vector<T>> columns;

  long last_column() const { return first_column + static_cast<long>(columns.size()) - 1; }
  const std::vector<T>& column(long c) const { return columns.at(static_cast<std::size_t>(c - first_column)); }
  friend bool operator==(const BasicFriezeArray&, const BasicFriezeArray&) = default;
};

using FriezeArray = BasicFriezeArray<RingElement>;
using SymbolicFriezeArray = BasicFriezeArray<LaurentPolynomial>;

/// Raised when knitting would divide by zero; such friezes need the symbolic path.
class KnitZeroDivisor : public DomainError {
 public:
  KnitZeroDivisor() : DomainError("knitting undefined: use symbolic evaluation") {}
};

namespace detail {

inline std::optional<RingElement> exact_div(const RingElement& a, const RingElement& b) {
  if (b.is_zero()) throw KnitZeroDivisor();
  return ring_exact_div(a, b);
}

inline std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return laurent_exact_div(a, b);
}

template <class T>
std::vector<T> sweep(const Quiver& q, std::vector<T> v, const std::vector<std::size_t>& order, const T& one) {
  Quiver cur = q;
  for (auto k : order) {
    auto next = exact_div(exchange_binomial(cur, k, v, one), v[k]);
    if (!next) throw DomainError("knitting leaves the ring at vertex " + std::to_string(k));
    v[k] = std::move(*next);
    cur = mutate_quiver(cur, k);
  }
  return v;
}

}  // namespace detail

/// Knits `forward` columns after and `backward` columns before the start
/// column (index 0). Throws KnitZeroDivisor when a divisor vanishes and
/// DomainError when a quotient leaves the ring or the quiver is cyclic.
template <class T>
BasicFriezeArray<T> knit(const Quiver& q, const std::vector<T>& start, std::size_t forward, std::size_t backward,
                         const T& one) {
  if (start.size() != q.size()) throw DomainError("start column has the wrong length");
  const auto order = source_order(q);
  const std::vector<std::size_t> sinks(order.rbegin(), order.rend());
  BasicFriezeArray<T> out{q, -static_cast<long>(backward), {}};
  std::vector<std::vector<T>> before;
  std::vector<T> v = start;
  for (std::size_t c = 0; c < backward; ++c) {
    v = detail::sweep(q, v, sinks, one);
    before.push_back(v);
  }
  out.columns.assign(before.rbegin(), before.rend());
  out.columns.push_back(start);
  v = start;
  for (std::size_t c = 0; c < forward; ++c) {
    v = detail::sweep(q, v, order, one);
    out.columns.push_back(v);
  }
  return out;
}

FriezeArray knit_values(const Quiver& q, const std::vector<RingElement>& start, std::size_t forward,
                        std::size_t backward);
SymbolicFriezeArray knit_symbolic(const Quiver& q, std::size_t forward, std::size_t backward);

/// Evaluates a symbolic array at the start values.
FriezeArray specialize(const SymbolicFriezeArray& a, const std::vector<RingElement>& start);

/// Knits numerically, falling back to symbolic evaluation when a zero shows up
/// in a divisor position.
FriezeArray knit_frieze(const Quiver& q, const std::vector<RingElement>& start, std::size_t forward,
                        std::size_t backward);

/// Failed mesh relations F(tau N) F(N) = prod F(M) + 1, as "column c, vertex k" strings.
template <class T>
std::vector<std::string> mesh_violations(const BasicFriezeArray<T>& a, const T& one) {
  std::vector<std::string> bad;
  const Quiver& q = a.quiver;
  for (long c = a.first_column + 1; c <= a.last_column(); ++c) {
    const auto& now = a.column(c);
    const auto& prev = a.column(c - 1);
    for (std::size_t k = 0; k < q.size(); ++k) {
      T mesh = one;
      for (std::size_t j = 0; j < q.size(); ++j) {
        for (int r = 0; r < q.arrows(j, k); ++r) mesh = mesh * now[j];
        for (int r = 0; r < q.arrows(k, j); ++r) mesh = mesh * prev[j];
      }
      if (!(now[k] * prev[k] == mesh + one)) {
        bad.push_back("column " + std::to_string(c) + ", vertex " + std::to_string(k));
      }
    }
  }
  return bad;
}

/// Longest path from a source to each vertex.
std::vector<std::size_t> slice_levels(const Quiver& q);

/// Staggered grid: one row per vertex, later columns to the left, each
/// vertex shifted by its level so mesh neighbours sit diagonally.
std::string render_frieze_text(const FriezeArray& a);
std::string render_frieze_text(const SymbolicFriezeArray& a);

/// Smallest p > 0 with column c + p equal to column c wherever both exist.
std::optional<long> translation_period(const FriezeArray& a);

}  // namespace friezekit
