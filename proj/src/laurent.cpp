#include "friezekit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace friezekit {

namespace {

int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic, greatest first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

using Poly = std::map<Exponents, BigInt, GrlexGreater>;

void accumulate(LaurentPolynomial::Terms& terms, const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

void accumulate(Poly& terms, const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const BigInt& c) {
  LaurentPolynomial p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponents& e, const BigInt& c) {
  LaurentPolynomial p(e.size());
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t nvars, Terms terms) {
  LaurentPolynomial p(nvars);
  for (auto& [e, c] : terms) {
    if (e.size() != nvars) throw DomainError("exponent vector has wrong length");
    accumulate(p.terms_, e, c);
  }
  return p;
}

void LaurentPolynomial::check_same(const LaurentPolynomial& o) const {
  if (nvars_ != o.nvars_) throw DomainError("Laurent polynomials over different variable sets");
}

Exponents LaurentPolynomial::denominator() const {
  Exponents d(nvars_, 0);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max(d[i], -e[i]);
  }
  return d;
}

LaurentPolynomial::Terms LaurentPolynomial::numerator() const {
  const Exponents d = denominator();
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents f(e);
    for (std::size_t i = 0; i < nvars_; ++i) f[i] += d[i];
    out.emplace(std::move(f), c);
  }
  return out;
}

bool LaurentPolynomial::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_same(b);
  LaurentPolynomial p(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate(p.terms_, e, ca * cb);
    }
  }
  return p;
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e) {
  LaurentPolynomial result = LaurentPolynomial::constant(p.nvars(), 1);
  for (unsigned k = 0; k < e; ++k) result = result * p;
  return result;
}

namespace {

std::string var_name(std::span<const std::string> names, std::size_t i) {
  if (i < names.size()) return names[i];
  return "x" + std::to_string(i + 1);
}

// Writes a monomial with positive exponents; returns false if it is 1.
bool write_monomial(std::ostream& os, const Exponents& e, std::span<const std::string> names) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    os << var_name(names, i);
    if (e[i] != 1) os << '^' << e[i];
    first = false;
  }
  return !first;
}

}  // namespace

std::string LaurentPolynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  Poly num;
  for (auto& [e, c] : numerator()) num.emplace(e, c);
  const Exponents d = denominator();

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : num) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::ostringstream mono;
    const bool has_vars = write_monomial(mono, e, names);
    if (!has_vars) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono.str();
    }
    first = false;
  }
  std::string numer = os.str();

  const bool has_den = std::any_of(d.begin(), d.end(), [](int x) { return x != 0; });
  if (!has_den) return numer;
  std::ostringstream den;
  write_monomial(den, d, names);
  const int nden = static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x != 0; }));
  std::string out = num.size() > 1 || numer.front() == '-' ? "(" + numer + ")" : numer;
  out += '/';
  if (nden == 1 && den.str().find('^') == std::string::npos) {
    out += den.str();
  } else {
    out += "(" + den.str() + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

std::optional<LaurentPolynomial> laurent_exact_div(const LaurentPolynomial& a,
                                                   const LaurentPolynomial& b) {
  if (a.nvars() != b.nvars()) throw DomainError("Laurent polynomials over different variable sets");
  if (b.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  const std::size_t n = a.nvars();
  if (a.is_zero()) return LaurentPolynomial(n);

  // b = x^m * g with g a polynomial not divisible by any variable.
  Exponents m(n, 0);
  bool init = false;
  for (const auto& [e, c] : b.terms()) {
    for (std::size_t i = 0; i < n; ++i) m[i] = init ? std::min(m[i], e[i]) : e[i];
    init = true;
  }
  Poly g;
  for (const auto& [e, c] : b.terms()) {
    Exponents f(e);
    for (std::size_t i = 0; i < n; ++i) f[i] -= m[i];
    g.emplace(std::move(f), c);
  }
  // a = x^-da * f with f polynomial.
  const Exponents da = a.denominator();
  Poly rem;
  for (auto& [e, c] : a.numerator()) rem.emplace(e, c);

  // Since x_i does not divide g, g | f x^k iff g | f.
  const auto& [lead_e, lead_c] = *g.begin();
  Poly quot;
  while (!rem.empty()) {
    const auto [re, rc] = *rem.begin();
    Exponents te(n);
    for (std::size_t i = 0; i < n; ++i) {
      te[i] = re[i] - lead_e[i];
      if (te[i] < 0) return std::nullopt;
    }
    if (rc % lead_c != 0) return std::nullopt;
    const BigInt tc = rc / lead_c;
    accumulate(quot, te, tc);
    Exponents e(n);
    for (const auto& [ge, gc] : g) {
      for (std::size_t i = 0; i < n; ++i) e[i] = te[i] + ge[i];
      accumulate(rem, e, -tc * gc);
    }
  }

  LaurentPolynomial::Terms out;
  for (const auto& [e, c] : quot) {
    Exponents f(e);
    for (std::size_t i = 0; i < n; ++i) f[i] -= da[i] + m[i];
    out.emplace(std::move(f), c);
  }
  auto q = LaurentPolynomial::from_terms(n, std::move(out));
  if (q * b != a) throw InvariantViolation("Laurent division verification failed");
  return q;
}

std::optional<RingElement> specialize(const LaurentPolynomial& p,
                                      std::span<const RingElement> values) {
  if (values.size() != p.nvars()) throw DomainError("wrong number of specialization values");
  if (values.empty()) {
    throw DomainError("cannot specialize a polynomial in zero variables");
  }
  const RingKind kind = values.front().kind();
  for (const auto& v : values) {
    if (v.kind() != kind) throw DomainError("specialization values from different rings");
  }
  const Exponents d = p.denominator();
  RingElement den = RingElement::one(kind);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (values[i].is_zero()) {
      throw DomainError("zero substituted into denominator variable x" + std::to_string(i + 1));
    }
    den = den * pow(values[i], static_cast<unsigned>(d[i]));
  }
  RingElement num = RingElement::zero(kind);
  for (const auto& [e, c] : p.numerator()) {
    RingElement t = RingElement::from_int(kind, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t = t * pow(values[i], static_cast<unsigned>(e[i]));
    }
    num = num + t;
  }
  return ring_exact_div(num, den);
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t nvars) : n_(nvars) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  LaurentPolynomial parse() {
    LaurentPolynomial num(n_);
    if (peek() == '(') {
      ++pos_;
      num = sum();
      expect(')');
    } else {
      num = sum();
    }
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      Exponents d(n_, 0);
      if (peek() == '(') {
        ++pos_;
        d = monomial_exponents();
        expect(')');
      } else {
        d = monomial_exponents();
      }
      for (auto& x : d) x = -x;
      num = num * LaurentPolynomial::monomial(d);
    }
    if (pos_ != s_.size()) fail("trailing characters");
    return num;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse Laurent polynomial '" + s_ + "': " + why);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(s_.substr(start, pos_ - start));
  }

  // x<i>[^k]
  void factor(Exponents& e) {
    if (peek() != 'x') fail("expected a variable");
    ++pos_;
    const BigInt idx = digits();
    if (idx < 1 || idx > n_) fail("variable index out of range");
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      power = static_cast<int>(digits());
    }
    e[static_cast<std::size_t>(idx) - 1] += power;
  }

  Exponents monomial_exponents() {
    Exponents e(n_, 0);
    if (peek() == '1' && (pos_ + 1 == s_.size() || s_[pos_ + 1] == ')')) {
      ++pos_;
      return e;
    }
    factor(e);
    while (peek() == '*') {
      ++pos_;
      factor(e);
    }
    return e;
  }

  LaurentPolynomial term() {
    BigInt coeff = 1;
    Exponents e(n_, 0);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = digits();
      if (peek() != '*') return LaurentPolynomial::monomial(e, coeff);
      ++pos_;
    }
    factor(e);
    while (peek() == '*') {
      ++pos_;
      factor(e);
    }
    return LaurentPolynomial::monomial(e, coeff);
  }

  LaurentPolynomial sum() {
    LaurentPolynomial acc(n_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      auto t = term();
      acc += sign < 0 ? -t : t;
      first = false;
    }
    return acc;
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::size_t n_;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, std::size_t nvars) {
  return LaurentParser(text, nvars).parse();
}

}  // namespace friezekit
