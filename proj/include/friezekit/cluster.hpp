#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "friezekit/laurent.hpp"
#include "friezekit/quiver.hpp"

namespace friezekit {

/// A seed reached from a fixed base seed: its quiver, the Laurent expansions
/// of its cluster variables in the base cluster, and the mutation path used.
struct Seed {
  Quiver quiver;
  std::vector<LaurentPolynomial> vars;
  std::vector<std::size_t> path;

  /// Base seed with identity expansions x_1..x_n and an empty path.
  static Seed base(const Quiver& q);
  std::size_t rank() const { return quiver.size(); }
};

/// Unordered cluster: sorted canonical text forms of the variables.
using ClusterKey = std::vector<std::string>;
ClusterKey cluster_key(const Seed& s);

/// Exchange relation at k. Throws InvariantViolation if the division is not
/// exact, which the Laurent phenomenon rules out.
Seed mutate_seed(const Seed& s, std::size_t k);
Seed mutate_along(Seed s, const std::vector<std::size_t>& path);

/// The exchange binomial prod_{k->j} v_j^b + prod_{j->k} v_j^b for any
/// commutative value type with a multiplicative identity `one`.
template <class T>
T exchange_binomial(const Quiver& q, std::size_t k, const std::vector<T>& v, const T& one) {
  T out = one, in = one;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const int b = q.b(k, j);
    for (int r = 0; r < b; ++r) out = out * v[j];
    for (int r = 0; r < -b; ++r) in = in * v[j];
  }
  return out + in;
}

/// Expansions L_i of the base variables in the current cluster of s
/// (x_i = L_i(x'_1, ..., x'_n)), obtained by replaying the path backwards.
std::vector<LaurentPolynomial> expand_base_in_current(const Seed& s);

/// Breadth-first exploration that stops quietly at `limit` clusters.
struct ClusterSearch {
  std::vector<Seed> seeds;
  bool complete = false;  ///< true iff no further cluster is reachable
};
ClusterSearch explore_clusters(const Seed& base, std::size_t limit);

/// One witness seed per cluster, in breadth-first order (directions 0..n-1,
/// FIFO). Throws DomainError("not finite type within budget") when more than
/// `limit` clusters are reachable.
std::vector<Seed> enumerate_clusters(const Seed& base, std::size_t limit);
/// Same traversal with the per-level mutations fanned out over OpenMP threads.
std::vector<Seed> enumerate_clusters_parallel(const Seed& base, std::size_t limit);

/// Union of the cluster variables over all given seeds, sorted by text form.
std::vector<LaurentPolynomial> distinct_cluster_variables(const std::vector<Seed>& seeds);

}  // namespace friezekit
