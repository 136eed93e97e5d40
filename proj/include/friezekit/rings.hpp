#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace friezekit {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for bad input data: malformed literals, ring mismatches, division by
/// zero, non-frieze vectors and the like. The CLI maps it to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant breaks (e.g. an exchange relation that
/// must divide exactly does not). Always an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class RingKind { Integer, Gaussian, QuadraticD3 };

std::string_view ring_tag(RingKind kind);
RingKind ring_from_tag(std::string_view tag);

struct Integer {
  BigInt v;
  friend bool operator==(const Integer&, const Integer&) = default;
};

/// a + b i
struct Gaussian {
  BigInt a, b;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

/// (a + b sqrt(-3)) / 2 with a = b (mod 2). This is the ring of integers of
/// Q(sqrt(-3)), which contains the units (+-1 +- sqrt(-3))/2.
struct QuadraticD3 {
  BigInt a, b;
  friend bool operator==(const QuadraticD3&, const QuadraticD3&) = default;
};

/// An element of one of the supported integral domains. Immutable value type.
class RingElement {
 public:
  using Repr = std::variant<Integer, Gaussian, QuadraticD3>;

  RingElement() : repr_(Integer{0}) {}
  RingElement(Integer x) : repr_(std::move(x)) {}
  RingElement(Gaussian x) : repr_(std::move(x)) {}
  /// Throws DomainError when the parity constraint is violated.
  RingElement(QuadraticD3 x);

  static RingElement integer(BigInt v) { return RingElement(Integer{std::move(v)}); }
  static RingElement gaussian(BigInt a, BigInt b) {
    return RingElement(Gaussian{std::move(a), std::move(b)});
  }
  /// (a + b sqrt(-3)) / 2
  static RingElement quadratic(BigInt a, BigInt b) {
    return RingElement(QuadraticD3{std::move(a), std::move(b)});
  }
  static RingElement from_int(RingKind kind, const BigInt& v);
  static RingElement zero(RingKind kind) { return from_int(kind, 0); }
  static RingElement one(RingKind kind) { return from_int(kind, 1); }

  RingKind kind() const { return static_cast<RingKind>(repr_.index()); }
  const Repr& repr() const { return repr_; }

  bool is_zero() const;
  /// Field norm (a^2 for integers, a^2+b^2, (a^2+3b^2)/4).
  BigInt norm() const;

  /// Only defined for Integer; other rings throw DomainError.
  bool is_positive() const;
  const BigInt& as_integer() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& x, const RingElement& y);
  friend RingElement operator-(const RingElement& x, const RingElement& y);
  friend RingElement operator*(const RingElement& x, const RingElement& y);
  friend bool operator==(const RingElement&, const RingElement&) = default;

  std::string to_string() const;

 private:
  Repr repr_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

/// q with q*y == x when it exists in the ring, nullopt otherwise.
/// Throws DomainError on y == 0 or mismatched rings.
std::optional<RingElement> ring_exact_div(const RingElement& x, const RingElement& y);

/// True iff x divides 1.
bool ring_is_unit(const RingElement& x);

RingElement pow(const RingElement& x, unsigned e);

/// Parses CLI literals: "7", "-3", "2-i", "1+1i", "-3i", "(1+1s)/2", "(7-s)/2".
/// The result lives in `kind`; integer literals are embedded.
RingElement parse_ring_literal(std::string_view text, RingKind kind);

}  // namespace friezekit
