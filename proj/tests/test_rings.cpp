#include <doctest.h>

#include <complex>
#include <random>

#include "friezekit/rings.hpp"

using namespace friezekit;

namespace {

RingElement random_element(std::mt19937& rng, RingKind kind, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  switch (kind) {
    case RingKind::Integer: return RingElement::integer(d(rng));
    case RingKind::Gaussian: return RingElement::gaussian(d(rng), d(rng));
    case RingKind::QuadraticD3: {
      const int a = d(rng);
      int b = d(rng);
      if ((a - b) % 2 != 0) ++b;
      return RingElement::quadratic(a, b);
    }
  }
  return {};
}

constexpr RingKind kAll[] = {RingKind::Integer, RingKind::Gaussian, RingKind::QuadraticD3};

}  // namespace

TEST_CASE("gaussian arithmetic agrees with std::complex") {
  std::mt19937 rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto x = random_element(rng, RingKind::Gaussian, 50);
    const auto y = random_element(rng, RingKind::Gaussian, 50);
    const auto& gx = std::get<Gaussian>(x.repr());
    const auto& gy = std::get<Gaussian>(y.repr());
    const std::complex<long long> cx(gx.a.convert_to<long long>(), gx.b.convert_to<long long>());
    const std::complex<long long> cy(gy.a.convert_to<long long>(), gy.b.convert_to<long long>());
    const auto p = cx * cy;
    CHECK(x * y == RingElement::gaussian(p.real(), p.imag()));
    CHECK(x + y == RingElement::gaussian(cx.real() + cy.real(), cx.imag() + cy.imag()));
    CHECK(x.norm() == std::norm(cx));
  }
}

TEST_CASE("quadratic arithmetic agrees with floating complex numbers") {
  std::mt19937 rng(2);
  const double r3 = std::sqrt(3.0);
  for (int t = 0; t < 500; ++t) {
    const auto x = random_element(rng, RingKind::QuadraticD3, 40);
    const auto y = random_element(rng, RingKind::QuadraticD3, 40);
    const auto as_complex = [&](const RingElement& e) {
      const auto& q = std::get<QuadraticD3>(e.repr());
      return std::complex<double>(q.a.convert_to<double>() / 2, q.b.convert_to<double>() * r3 / 2);
    };
    const auto z = as_complex(x * y);
    const auto w = as_complex(x) * as_complex(y);
    CHECK(std::abs(z - w) < 1e-6);
  }
}

TEST_CASE("exact division inverts multiplication in every ring") {
  std::mt19937 rng(3);
  for (auto kind : kAll) {
    for (int t = 0; t < 300; ++t) {
      const auto a = random_element(rng, kind, 30);
      const auto b = random_element(rng, kind, 30);
      if (b.is_zero()) continue;
      const auto q = ring_exact_div(a * b, b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
      if (const auto r = ring_exact_div(a, b)) CHECK(*r * b == a);
    }
  }
}

TEST_CASE("exact division reports non-divisibility") {
  CHECK_FALSE(ring_exact_div(RingElement::integer(7), RingElement::integer(2)));
  CHECK_FALSE(ring_exact_div(RingElement::gaussian(1, 0), RingElement::gaussian(1, 1)));
  CHECK(ring_exact_div(RingElement::gaussian(2, 0), RingElement::gaussian(1, 1)) == RingElement::gaussian(1, -1));
  CHECK_FALSE(ring_exact_div(RingElement::quadratic(2, 0), RingElement::quadratic(4, 0)));
  CHECK_THROWS_AS(ring_exact_div(RingElement::integer(1), RingElement::integer(0)), DomainError);
  CHECK_THROWS_AS(ring_exact_div(RingElement::integer(1), RingElement::gaussian(1, 0)), DomainError);
}

TEST_CASE("units") {
  CHECK(ring_is_unit(RingElement::integer(-1)));
  CHECK_FALSE(ring_is_unit(RingElement::integer(2)));
  CHECK(ring_is_unit(RingElement::gaussian(0, -1)));
  CHECK_FALSE(ring_is_unit(RingElement::gaussian(1, 1)));
  int units = 0;
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      if ((a - b) % 2 == 0 && ring_is_unit(RingElement::quadratic(a, b))) ++units;
    }
  }
  CHECK(units == 6);
  const auto w = RingElement::quadratic(-1, 1);
  CHECK(pow(w, 3) == RingElement::one(RingKind::QuadraticD3));
}

TEST_CASE("quadratic elements need matching parity") {
  CHECK_THROWS_AS(RingElement::quadratic(1, 0), DomainError);
  CHECK_NOTHROW(RingElement::quadratic(1, 1));
}

TEST_CASE("literals round-trip through to_string") {
  std::mt19937 rng(4);
  for (auto kind : kAll) {
    for (int t = 0; t < 200; ++t) {
      const auto x = random_element(rng, kind, 20);
      CHECK(parse_ring_literal(x.to_string(), kind) == x);
    }
  }
  CHECK(parse_ring_literal("1+1i", RingKind::Gaussian) == RingElement::gaussian(1, 1));
  CHECK(parse_ring_literal("-3i", RingKind::Gaussian) == RingElement::gaussian(0, -3));
  CHECK(parse_ring_literal("(7-s)/2", RingKind::QuadraticD3) == RingElement::quadratic(7, -1));
  CHECK(parse_ring_literal("5", RingKind::QuadraticD3) == RingElement::quadratic(10, 0));
  CHECK_THROWS_AS(parse_ring_literal("2+i", RingKind::Integer), DomainError);
  CHECK_THROWS_AS(parse_ring_literal("abc", RingKind::Gaussian), DomainError);
}

TEST_CASE("positivity is an integer notion") {
  CHECK(RingElement::integer(3).is_positive());
  CHECK_FALSE(RingElement::integer(0).is_positive());
  CHECK_THROWS_AS(RingElement::gaussian(1, 0).is_positive(), DomainError);
}
