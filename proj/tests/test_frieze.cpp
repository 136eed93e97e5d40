#include <doctest.h>

#include "fixtures.hpp"

using namespace friezekit;
using namespace fixtures;

namespace {

// Naive frieze-vector check with machine integers, independent of the library.
bool naive_frieze_vector(const std::vector<std::vector<int>>& arrows_out, const std::vector<long>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    long out = 1, in = 1;
    for (std::size_t j = 0; j < n; ++j) {
      for (int r = 0; r < arrows_out[i][j]; ++r) out *= a[j];
      for (int r = 0; r < arrows_out[j][i]; ++r) in *= a[j];
    }
    if ((out + in) % a[i] != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("A3 frieze vectors and b-vectors") {
  const Seed base = Seed::base(a3_quiver());
  CHECK(enumerate_frieze_vectors(base, 10) == a3_frieze_vectors());
  CHECK(enumerate_frieze_vectors(base, 100) == a3_frieze_vectors());
  CHECK(enumerate_frieze_vectors_serial(base, 10) == a3_frieze_vectors());
}

TEST_CASE("enumeration agrees with a naive scan") {
  const auto q = Quiver::from_arrows(4, {{0, 1, 1}, {2, 1, 1}, {2, 3, 1}});
  std::vector<std::vector<int>> out(4, std::vector<int>(4, 0));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = q.arrows(i, j);
  }
  std::vector<FriezeVector> naive;
  const long bound = 14;
  for (long a = 1; a <= bound; ++a) {
    for (long b = 1; b <= bound; ++b) {
      for (long c = 1; c <= bound; ++c) {
        for (long d = 1; d <= bound; ++d) {
          if (naive_frieze_vector(out, {a, b, c, d})) naive.push_back({a, b, c, d});
        }
      }
    }
  }
  const Seed base = Seed::base(q);
  CHECK(enumerate_frieze_vectors(base, bound) == naive);
  CHECK(enumerate_frieze_vectors_serial(base, bound) == naive);
  CHECK(naive.size() == 42);
}

TEST_CASE("divisibility criterion agrees with exhaustive evaluation") {
  const Seed base = Seed::base(a3_quiver());
  for (long a = 1; a <= 6; ++a) {
    for (long b = 1; b <= 6; ++b) {
      for (long c = 1; c <= 6; ++c) {
        FriezeAssignment f(base, to_ring(ints({a, b, c})));
        CHECK(is_frieze_vector_acyclic(f) == is_frieze_vector_exhaustive(f, 100));
      }
    }
  }
}

TEST_CASE("affine frieze vectors include the knitted columns") {
  const Seed base = Seed::base(a12_quiver());
  const auto found = enumerate_frieze_vectors(base, 50);
  for (const auto& v : {ints({1, 1, 1}), ints({7, 3, 2}), ints({41, 26, 11}), ints({2, 3, 7}), ints({1, 2, 1})}) {
    CHECK(std::find(found.begin(), found.end(), v) != found.end());
  }
}

TEST_CASE("criterion preconditions") {
  const auto cyc = Quiver::from_arrows(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  FriezeAssignment f(Seed::base(cyc), to_ring(ints({1, 1, 1})));
  CHECK_THROWS_AS(is_frieze_vector_acyclic(f), DomainError);
  CHECK(is_frieze_vector_exhaustive(f, 100));
  CHECK_THROWS_AS(FriezeAssignment(Seed::base(a3_quiver()), to_ring(ints({1, 1}))), DomainError);
  CHECK_THROWS_AS(FriezeAssignment(Seed::base(a3_quiver()), to_ring(ints({1, 0, 1}))), DomainError);
  CHECK_THROWS_AS(enumerate_frieze_vectors(Seed::base(a3_quiver()), 0), DomainError);
  CHECK_THROWS_AS(companion_b_vector(FriezeAssignment(Seed::base(a3_quiver()), to_ring(ints({2, 2, 2})))),
                  DomainError);
}

TEST_CASE("phi and its inverse") {
  const Seed base = Seed::base(a3_quiver());
  CHECK(phi(base, base) == ints({1, 1, 1}));
  CHECK(phi(base, mutate_seed(base, 1)) == ints({1, 2, 1}));
  CHECK(phi_inverse(base, ints({1, 1, 1}), 100).path.empty());
  CHECK_THROWS_AS(phi_inverse(base, ints({2, 2, 2}), 100), DomainError);
  CHECK_THROWS_AS(phi_inverse(base, ints({0, 1, 1}), 100), DomainError);
}

TEST_CASE("evaluation leaves the ring for non-frieze values") {
  const Seed base = Seed::base(a2_quiver());
  FriezeAssignment f(base, to_ring(ints({2, 2})));
  const auto vars = distinct_cluster_variables(enumerate_clusters(base, 10));
  bool left = false;
  for (const auto& u : vars) left = left || !evaluate_frieze(f, u).has_value();
  CHECK(left);
}

TEST_CASE("unitary search") {
  const Seed base = Seed::base(a3_quiver());
  const auto r = is_unitary(base, to_ring(ints({2, 5, 2})), 100);
  REQUIRE(r.cluster.has_value());
  CHECK(phi(base, *r.cluster) == ints({2, 5, 2}));
  const std::vector<RingElement> signs{RingElement::integer(-1), RingElement::integer(1), RingElement::integer(-1)};
  CHECK(is_unitary(base, signs, 100).cluster.has_value());
  const std::vector<RingElement> g{RingElement::gaussian(1, 0), RingElement::gaussian(1, 1)};
  const auto n = is_unitary(Seed::base(a2_quiver()), g, 100);
  CHECK_FALSE(n.cluster.has_value());
  CHECK(n.exhaustive);
  CHECK(n.clusters_searched == 5);
  const auto partial = is_unitary(Seed::base(a2_quiver()), g, 3);
  CHECK_FALSE(partial.exhaustive);
}
