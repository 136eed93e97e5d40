#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "friezekit/cluster.hpp"
#include "friezekit/rings.hpp"

namespace friezekit {

/// A non-zero frieze given by its values a_1..a_n on the cluster of a base
/// seed. Every cluster variable u, written as a Laurent polynomial in that
/// cluster, is sent to u(a_1, ..., a_n).
class FriezeAssignment {
 public:
  /// Throws DomainError on a length mismatch, mixed rings or a zero value.
  FriezeAssignment(Seed base, std::vector<RingElement> values);

  const Seed& base() const { return base_; }
  const std::vector<RingElement>& values() const { return values_; }
  RingKind ring() const { return values_.front().kind(); }

 private:
  Seed base_;
  std::vector<RingElement> values_;
};

using FriezeVector = std::vector<BigInt>;

/// Value of the frieze on u (u expressed in the base cluster); nullopt when
/// the value leaves the ring.
std::optional<RingElement> evaluate_frieze(const FriezeAssignment& f, const LaurentPolynomial& u);

/// Divisibility criterion for an acyclic base seed: a_i divides the exchange
/// binomial at i for every i. Throws DomainError for a cyclic quiver or a
/// base that is not the identity seed.
bool is_frieze_vector_acyclic(const FriezeAssignment& f);

/// Frieze-vector test by evaluating every cluster variable of a finite-type
/// cluster algebra (valid for any base quiver).
bool is_frieze_vector_exhaustive(const FriezeAssignment& f, std::size_t limit);

/// b_i = (exchange binomial at i) / a_i. Requires is_frieze_vector_acyclic.
std::vector<RingElement> companion_b_vector(const FriezeAssignment& f);

/// All positive integer vectors in [1, bound]^n passing the acyclic
/// criterion, in lexicographic order. The candidate box is scanned with
/// OpenMP; the serial variant is the reference implementation.
std::vector<FriezeVector> enumerate_frieze_vectors(const Seed& base, long bound);
std::vector<FriezeVector> enumerate_frieze_vectors_serial(const Seed& base, long bound);

/// phi(target) = (L_1(1..1), ..., L_n(1..1)) where x_i = L_i(target cluster).
FriezeVector phi(const Seed& base, const Seed& target);

/// The unique cluster (witness seed) on which the frieze with base values a
/// is identically 1. Finite type: exhaustive exchange-graph search.
Seed phi_inverse(const Seed& base, const FriezeVector& a, std::size_t limit);

struct UnitarySearch {
  std::optional<Seed> cluster;    ///< first cluster (BFS order) of units
  std::size_t clusters_searched;  ///< clusters evaluated
  bool exhaustive;                ///< the whole exchange graph was searched
};

/// Looks for a cluster on which every value is a unit, within `limit` clusters.
UnitarySearch is_unitary(const Seed& base, const std::vector<RingElement>& values, std::size_t limit);

std::vector<RingElement> to_ring(const FriezeVector& v);

}  // namespace friezekit
