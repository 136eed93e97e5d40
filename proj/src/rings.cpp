#include "friezekit/rings.hpp"

#include <cctype>
#include <sstream>

namespace friezekit {

namespace {

// floor(n / d) for d > 0
BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

// nearest integer to n / d, d > 0
BigInt round_div(const BigInt& n, const BigInt& d) { return floor_div(2 * n + d, 2 * d); }

bool same_parity(const BigInt& a, const BigInt& b) { return ((a - b) % 2) == 0; }

void require_same(const RingElement& x, const RingElement& y) {
  if (x.kind() != y.kind()) {
    throw DomainError("ring mismatch: " + std::string(ring_tag(x.kind())) + " vs " +
                      std::string(ring_tag(y.kind())));
  }
}

}  // namespace

std::string_view ring_tag(RingKind kind) {
  switch (kind) {
    case RingKind::Integer: return "Z";
    case RingKind::Gaussian: return "Zi";
    case RingKind::QuadraticD3: return "Zsqrt-3half";
  }
  return "?";
}

RingKind ring_from_tag(std::string_view tag) {
  if (tag == "Z") return RingKind::Integer;
  if (tag == "Zi") return RingKind::Gaussian;
  if (tag == "Zsqrt-3half") return RingKind::QuadraticD3;
  throw DomainError("unknown ring tag '" + std::string(tag) + "'");
}

RingElement::RingElement(QuadraticD3 x) : repr_(Integer{0}) {
  if (!same_parity(x.a, x.b)) {
    throw DomainError("(a+b*sqrt(-3))/2 requires a = b mod 2");
  }
  repr_ = std::move(x);
}

RingElement RingElement::from_int(RingKind kind, const BigInt& v) {
  switch (kind) {
    case RingKind::Integer: return integer(v);
    case RingKind::Gaussian: return gaussian(v, 0);
    case RingKind::QuadraticD3: return quadratic(2 * v, 0);
  }
  throw InvariantViolation("bad ring kind");
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return x.v == 0;
        } else {
          return x.a == 0 && x.b == 0;
        }
      },
      repr_);
}

BigInt RingElement::norm() const {
  return std::visit(
      [](const auto& x) -> BigInt {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return x.v * x.v;
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return x.a * x.a + x.b * x.b;
        } else {
          return (x.a * x.a + 3 * x.b * x.b) / 4;
        }
      },
      repr_);
}

bool RingElement::is_positive() const { return as_integer() > 0; }

const BigInt& RingElement::as_integer() const {
  if (const auto* z = std::get_if<Integer>(&repr_)) return z->v;
  throw DomainError("positivity and integer values are only defined over Z, got " +
                    std::string(ring_tag(kind())));
}

RingElement RingElement::operator-() const {
  return std::visit(
      [](const auto& x) -> RingElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return Integer{-x.v};
        } else {
          return T{-x.a, -x.b};
        }
      },
      repr_);
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  require_same(x, y);
  return std::visit(
      [&](const auto& l) -> RingElement {
        using T = std::decay_t<decltype(l)>;
        const auto& r = std::get<T>(y.repr());
        if constexpr (std::is_same_v<T, Integer>) {
          return Integer{l.v + r.v};
        } else {
          return T{l.a + r.a, l.b + r.b};
        }
      },
      x.repr());
}

RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

RingElement operator*(const RingElement& x, const RingElement& y) {
  require_same(x, y);
  return std::visit(
      [&](const auto& l) -> RingElement {
        using T = std::decay_t<decltype(l)>;
        const auto& r = std::get<T>(y.repr());
        if constexpr (std::is_same_v<T, Integer>) {
          return Integer{l.v * r.v};
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return Gaussian{l.a * r.a - l.b * r.b, l.a * r.b + l.b * r.a};
        } else {
          // ((a1 + b1 s)(a2 + b2 s)) / 4 with s^2 = -3, rewritten over 2.
          return QuadraticD3{(l.a * r.a - 3 * l.b * r.b) / 2, (l.a * r.b + l.b * r.a) / 2};
        }
      },
      x.repr());
}

std::optional<RingElement> ring_exact_div(const RingElement& x, const RingElement& y) {
  require_same(x, y);
  if (y.is_zero()) throw DomainError("division by zero");
  return std::visit(
      [&](const auto& num) -> std::optional<RingElement> {
        using T = std::decay_t<decltype(num)>;
        const auto& den = std::get<T>(y.repr());
        if constexpr (std::is_same_v<T, Integer>) {
          if (num.v % den.v != 0) return std::nullopt;
          return RingElement(Integer{num.v / den.v});
        } else {
          // Multiply by the conjugate, round by the norm, verify.
          const BigInt n = y.norm();
          RingElement conj(T{den.a, -den.b});
          const auto& prod = std::get<T>((x * conj).repr());
          BigInt qa = round_div(prod.a, n);
          BigInt qb = round_div(prod.b, n);
          if constexpr (std::is_same_v<T, QuadraticD3>) {
            if (!same_parity(qa, qb)) return std::nullopt;
          }
          RingElement q(T{qa, qb});
          if (q * y != x) return std::nullopt;
          return q;
        }
      },
      x.repr());
}

bool ring_is_unit(const RingElement& x) { return x.norm() == 1; }

RingElement pow(const RingElement& x, unsigned e) {
  RingElement result = RingElement::one(x.kind());
  RingElement base = x;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

namespace {

// "a" + "b<unit>" with the usual sign and unit-coefficient elisions
std::string format_pair(const BigInt& a, const BigInt& b, const char* unit) {
  std::ostringstream os;
  if (b == 0) {
    os << a;
    return os.str();
  }
  if (a != 0) os << a;
  if (b < 0) {
    os << '-';
  } else if (a != 0) {
    os << '+';
  }
  BigInt mag = b < 0 ? BigInt(-b) : b;
  if (mag != 1) os << mag;
  os << unit;
  return os.str();
}

}  // namespace

std::string RingElement::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return x.v.str();
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return format_pair(x.a, x.b, "i");
        } else {
          if (x.a % 2 == 0) return format_pair(x.a / 2, x.b / 2, "s");
          return "(" + format_pair(x.a, x.b, "s") + ")/2";
        }
      },
      repr_);
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

RingElement parse_ring_literal(std::string_view text, RingKind kind) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw DomainError("empty ring literal");

  bool halved = false;
  if (s.front() == '(') {
    const auto close = s.rfind(')');
    if (close == std::string::npos || s.substr(close) != ")/2") {
      throw DomainError("bad ring literal '" + std::string(text) + "'");
    }
    s = s.substr(1, close - 1);
    halved = true;
  }

  const char unit = kind == RingKind::Gaussian ? 'i' : kind == RingKind::QuadraticD3 ? 's' : '\0';
  BigInt re = 0, im = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw DomainError("bad ring literal '" + std::string(text) + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt mag = start == pos ? BigInt(1) : BigInt(s.substr(start, pos - start));
    bool imaginary = false;
    if (pos < s.size() && unit != '\0' && s[pos] == unit) {
      imaginary = true;
      ++pos;
    } else if (start == pos) {
      throw DomainError("bad ring literal '" + std::string(text) + "'");
    }
    (imaginary ? im : re) += sign * mag;
    any = true;
  }

  switch (kind) {
    case RingKind::Integer:
      if (halved) throw DomainError("'/2' literal is not an integer");
      return RingElement::integer(re);
    case RingKind::Gaussian:
      if (halved) throw DomainError("'/2' literal is not a Gaussian integer");
      return RingElement::gaussian(re, im);
    case RingKind::QuadraticD3:
      if (halved) return RingElement::quadratic(re, im);
      return RingElement::quadratic(2 * re, 2 * im);
  }
  throw InvariantViolation("bad ring kind");
}

}  // namespace friezekit
