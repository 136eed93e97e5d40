#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "friezekit/rings.hpp"

namespace friezekit {

using Exponents = std::vector<int>;

/// Exact Laurent polynomial over Z in a fixed number of variables.
///
/// Stored as a map from signed exponent vectors to nonzero coefficients, which
/// is a canonical form: equality is structural. The numerator/denominator view
/// (polynomial over x^d with no variable dividing both) is derived on demand.
class LaurentPolynomial {
 public:
  using Terms = std::map<Exponents, BigInt>;

  explicit LaurentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static LaurentPolynomial constant(std::size_t nvars, const BigInt& c);
  /// x_i, 0-based.
  static LaurentPolynomial variable(std::size_t nvars, std::size_t i);
  static LaurentPolynomial monomial(const Exponents& e, const BigInt& c = 1);
  static LaurentPolynomial from_terms(std::size_t nvars, Terms terms);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Denominator exponents d (all >= 0).
  Exponents denominator() const;
  /// Numerator f with this == f / x^d; exponents all >= 0.
  Terms numerator() const;
  /// True when every coefficient is positive.
  bool has_positive_coefficients() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// "(x1*x3 + x2 + 1)/(x2*x3)"; variables named x1..xn unless names given.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_same(const LaurentPolynomial& o) const;

  std::size_t nvars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e);

/// q with q*b == a when q is again a Laurent polynomial, else nullopt.
/// Throws DomainError when b == 0 or nvars differ.
std::optional<LaurentPolynomial> laurent_exact_div(const LaurentPolynomial& a,
                                                   const LaurentPolynomial& b);

/// Evaluates at x_i = values[i]. Returns nullopt when the quotient leaves the
/// ring; throws DomainError when a denominator variable is sent to zero.
std::optional<RingElement> specialize(const LaurentPolynomial& p,
                                      std::span<const RingElement> values);

/// Parses the text form produced by to_string (names x1..xn).
LaurentPolynomial parse_laurent(std::string_view text, std::size_t nvars);

}  // namespace friezekit
