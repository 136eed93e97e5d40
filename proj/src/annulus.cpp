#include "friezekit/annulus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace friezekit {

MarkedAnnulus::MarkedAnnulus(int outer, int inner) : p(outer), q(inner) {
  if (p < 1 || q < 1) throw DomainError("annulus needs at least one marked point on each boundary");
}

std::ostream& operator<<(std::ostream& os, const Arc& a) {
  switch (a.kind) {
    case ArcKind::Bridging:
      return os << "Bridging(" << a.first << "," << a.second << "," << a.winding << ")";
    case ArcKind::PeripheralOuter:
      return os << "PeripheralOuter(" << a.first << "," << a.second << ")";
    case ArcKind::PeripheralInner:
      return os << "PeripheralInner(" << a.first << "," << a.second << ")";
  }
  return os;
}

std::string to_string(const Arc& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

ArcClass classify_arc(const Arc& a) { return a.is_bridging() ? ArcClass::Transjective : ArcClass::Regular; }

namespace {

long floordiv(long a, long b) {
  long d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

long floormod(long a, long b) { return a - floordiv(a, b) * b; }

// A marked point of the universal cover. Points are ordered along the
// boundary of the infinite polygon: top points left to right, then bottom
// points right to left.
struct CoverPoint {
  bool bottom = false;
  long x = 0;

  std::pair<bool, long> key() const { return {bottom, bottom ? -x : x}; }
  friend bool operator<(const CoverPoint& a, const CoverPoint& b) { return a.key() < b.key(); }
  friend bool operator==(const CoverPoint& a, const CoverPoint& b) = default;
  CoverPoint shifted(long d) const { return {bottom, x + d}; }
};

struct Chord {
  CoverPoint u, v;  // u < v
};

Chord make_chord(CoverPoint a, CoverPoint b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

Chord lift(const Arc& a, const MarkedAnnulus& A, long m) {
  const long L = A.period();
  switch (a.kind) {
    case ArcKind::Bridging:
      return make_chord({false, a.first * static_cast<long>(A.q) + m * L},
                        {true, a.second * static_cast<long>(A.p) + (a.winding + m) * L});
    case ArcKind::PeripheralOuter:
      return make_chord({false, a.first * static_cast<long>(A.q) + m * L},
                        {false, (a.first + a.second) * static_cast<long>(A.q) + m * L});
    case ArcKind::PeripheralInner:
      return make_chord({true, a.first * static_cast<long>(A.p) + m * L},
                        {true, (a.first + a.second) * static_cast<long>(A.p) + m * L});
  }
  throw InvariantViolation("unknown arc kind");
}

bool chords_cross(const Chord& a, const Chord& b) {
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

Arc arc_from_chord(const Chord& c, const MarkedAnnulus& A) {
  const long L = A.period();
  if (!c.u.bottom && c.v.bottom) {
    const long m = floordiv(c.u.x, L);
    const long top = c.u.x - m * L;
    const long bot = c.v.x - m * L;
    return Arc::bridging(static_cast<int>(top / A.q), static_cast<int>(floormod(bot / A.p, A.q)),
                         floordiv(bot, L));
  }
  const long lo = std::min(c.u.x, c.v.x);
  const long hi = std::max(c.u.x, c.v.x);
  if (!c.u.bottom) {
    return Arc::peripheral_outer(static_cast<int>(floormod(lo / A.q, A.p)), static_cast<int>((hi - lo) / A.q));
  }
  return Arc::peripheral_inner(static_cast<int>(floormod(lo / A.p, A.q)), static_cast<int>((hi - lo) / A.p));
}

long shift_radius(const Arc& a, const Arc& b) {
  return std::abs(a.winding) + std::abs(b.winding) + 3;
}

}  // namespace

void validate_arc(const Arc& a, const MarkedAnnulus& A) {
  const auto bad = [&](const std::string& why) { throw DomainError("invalid arc " + to_string(a) + ": " + why); };
  switch (a.kind) {
    case ArcKind::Bridging:
      if (a.first < 0 || a.first >= A.p) bad("outer point out of range");
      if (a.second < 0 || a.second >= A.q) bad("inner point out of range");
      break;
    case ArcKind::PeripheralOuter:
      if (a.first < 0 || a.first >= A.p) bad("start out of range");
      if (a.second < 2 || a.second > A.p) bad("span must lie in [2, p]");
      break;
    case ArcKind::PeripheralInner:
      if (a.first < 0 || a.first >= A.q) bad("start out of range");
      if (a.second < 2 || a.second > A.q) bad("span must lie in [2, q]");
      break;
  }
}

bool arcs_cross(const Arc& a, const Arc& b, const MarkedAnnulus& A) {
  validate_arc(a, A);
  validate_arc(b, A);
  const Chord base = lift(a, A, 0);
  const long r = shift_radius(a, b);
  for (long m = -r; m <= r; ++m) {
    if (chords_cross(base, lift(b, A, m))) return true;
  }
  return false;
}

Triangulation::Triangulation(MarkedAnnulus annulus, std::vector<Arc> arcs)
    : annulus_(annulus), arcs_(std::move(arcs)) {
  if (arcs_.size() != static_cast<std::size_t>(annulus_.rank())) {
    throw DomainError("triangulation needs " + std::to_string(annulus_.rank()) + " arcs, got " +
                      std::to_string(arcs_.size()));
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    validate_arc(arcs_[i], annulus_);
    for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
      if (arcs_[i] == arcs_[j]) throw DomainError("repeated arc " + to_string(arcs_[i]));
      if (arcs_cross(arcs_[i], arcs_[j], annulus_)) {
        throw DomainError("arcs " + to_string(arcs_[i]) + " and " + to_string(arcs_[j]) + " cross");
      }
    }
  }
}

bool Triangulation::all_bridging() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.is_bridging(); });
}

bool Triangulation::same_arcs(const Triangulation& other) const {
  if (!(annulus_ == other.annulus_)) return false;
  auto a = arcs_, b = other.arcs_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Triangulation fan_triangulation(const MarkedAnnulus& A) {
  const int n = A.rank();
  std::vector<Arc> path;
  for (int b = 0; b < A.q; ++b) {
    path.push_back(arc_from_chord(make_chord({false, 0}, {true, static_cast<long>(b) * A.p}), A));
  }
  for (int t = 1; t <= A.p; ++t) {
    path.push_back(arc_from_chord(
        make_chord({false, static_cast<long>(t) * A.q}, {true, static_cast<long>(A.q - 1) * A.p}), A));
  }
  std::vector<Arc> arcs;
  for (int k = 0; k < n; ++k) arcs.push_back(path[static_cast<std::size_t>(((A.q - 1 - k) % n + n) % n)]);
  return Triangulation(A, std::move(arcs));
}

namespace {

using Label = std::optional<std::size_t>;

// A triangle of the lifted triangulation; vertices in boundary order, which
// runs clockwise around the triangle.
struct CoverTriangle {
  CoverPoint v0, v1, v2;
  Label e01, e12, e20;
};

// Finite window of the lifted triangulation around the fundamental domain.
class CoverComplex {
 public:
  explicit CoverComplex(const Triangulation& t) : A_(t.annulus()) {
    long w = 0;
    for (const auto& a : t.arcs()) w = std::max(w, std::abs(a.winding));
    const long r = w + 6;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (long m = -r; m <= r; ++m) add(lift(t[i], A_, m), i);
    }
    const long L = A_.period();
    for (long x = -(r + 2 * w + 4) * L; x <= (r + 2 * w + 4) * L; x += A_.q) {
      add(make_chord({false, x}, {false, x + A_.q}), std::nullopt);
    }
    for (long x = -(r + 2 * w + 4) * L; x <= (r + 2 * w + 4) * L; x += A_.p) {
      add(make_chord({true, x}, {true, x + A_.p}), std::nullopt);
    }
  }

  Label label(CoverPoint a, CoverPoint b) const {
    const auto c = make_chord(a, b);
    auto it = edges_.find({c.u, c.v});
    if (it == edges_.end()) throw InvariantViolation("missing edge in lifted triangulation");
    return it->second;
  }

  // Third vertices of the two triangles on the chord: (inside, outside).
  std::pair<CoverPoint, CoverPoint> apexes(const Chord& c) const {
    std::optional<CoverPoint> in, out;
    const auto& nu = neighbours_.at(c.u);
    const auto& nv = neighbours_.at(c.v);
    for (const auto& w : nu) {
      if (!nv.count(w)) continue;
      auto& slot = (c.u < w && w < c.v) ? in : out;
      if (slot) throw InvariantViolation("ambiguous triangle in lifted triangulation");
      slot = w;
    }
    if (!in || !out) throw InvariantViolation("arc does not bound two triangles");
    return {*in, *out};
  }

  CoverTriangle triangle(CoverPoint a, CoverPoint b, CoverPoint c) const {
    std::array<CoverPoint, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2], label(v[0], v[1]), label(v[1], v[2]), label(v[2], v[0])};
  }

 private:
  void add(const Chord& c, Label l) {
    edges_[{c.u, c.v}] = l;
    neighbours_[c.u].insert(c.v);
    neighbours_[c.v].insert(c.u);
  }

  MarkedAnnulus A_;
  std::map<std::pair<CoverPoint, CoverPoint>, Label> edges_;
  std::map<CoverPoint, std::set<CoverPoint>> neighbours_;
};

}  // namespace

FlipResult flip(const Triangulation& t, std::size_t k) {
  if (k >= t.size()) throw DomainError("flip index " + std::to_string(k) + " out of range");
  const auto& A = t.annulus();
  const CoverComplex cover(t);
  const Chord c = lift(t[k], A, 0);
  const auto [win, wout] = cover.apexes(c);
  Quadrilateral quad{cover.label(c.u, win), cover.label(win, c.v), cover.label(c.v, wout), cover.label(wout, c.u)};
  const Arc fresh = arc_from_chord(make_chord(win, wout), A);
  auto arcs = t.arcs();
  arcs[k] = fresh;
  return {Triangulation(A, std::move(arcs)), fresh, quad};
}

Quiver quiver_of(const Triangulation& t) {
  const auto& A = t.annulus();
  const long L = A.period();
  const CoverComplex cover(t);
  std::map<std::tuple<CoverPoint, CoverPoint, CoverPoint>, CoverTriangle> triangles;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Chord c = lift(t[k], A, 0);
    const auto [win, wout] = cover.apexes(c);
    for (const auto& w : {win, wout}) {
      auto tri = cover.triangle(c.u, c.v, w);
      const long d = -floordiv(tri.v0.x, L) * L;
      tri = cover.triangle(tri.v0.shifted(d), tri.v1.shifted(d), tri.v2.shifted(d));
      triangles.emplace(std::make_tuple(tri.v0, tri.v1, tri.v2), tri);
    }
  }
  const std::size_t n = t.size();
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  const auto arrow = [&](Label from, Label to) {
    if (!from || !to || *from == *to) return;
    ++b[*from][*to];
    --b[*to][*from];
  };
  for (const auto& [key, tri] : triangles) {
    arrow(tri.e01, tri.e12);
    arrow(tri.e12, tri.e20);
    arrow(tri.e20, tri.e01);
  }
  return Quiver::from_matrix(std::move(b));
}

namespace {

BigInt side_value(const Label& l, const std::vector<BigInt>& values) { return l ? values[*l] : BigInt(1); }

BigInt exchange_numerator(const Quadrilateral& q, const std::vector<BigInt>& v) {
  return side_value(q.a, v) * side_value(q.c, v) + side_value(q.b, v) * side_value(q.d, v);
}

void check_values(const Triangulation& t, const std::vector<BigInt>& values) {
  if (values.size() != t.size()) {
    throw DomainError("expected " + std::to_string(t.size()) + " values, got " + std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (v <= 0) throw DomainError("frieze values must be positive integers");
  }
}

}  // namespace

ValuedTriangulation transport(ValuedTriangulation vt, const std::vector<std::size_t>& path) {
  check_values(vt.triangulation, vt.values);
  for (auto k : path) {
    auto r = flip(vt.triangulation, k);
    const BigInt num = exchange_numerator(r.quad, vt.values);
    if (num % vt.values[k] != 0) throw DomainError("exchange relation leaves the integers at arc " + std::to_string(k));
    vt.values[k] = num / vt.values[k];
    vt.triangulation = std::move(r.triangulation);
  }
  return vt;
}

std::vector<std::size_t> reduce_to_bridging(ValuedTriangulation& vt) {
  std::vector<std::size_t> done;
  const auto& A = vt.triangulation.annulus();
  while (!vt.triangulation.all_bridging()) {
    const auto& arcs = vt.triangulation.arcs();
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < arcs.size() && !pick; ++i) {
      if (arcs[i].is_bridging()) continue;
      const Chord ci = lift(arcs[i], A, 0);
      bool nested = false;
      for (std::size_t j = 0; j < arcs.size() && !nested; ++j) {
        if (j == i || arcs[j].kind != arcs[i].kind) continue;
        for (long m = -2; m <= 2 && !nested; ++m) {
          const Chord cj = lift(arcs[j], A, m);
          nested = !(cj.u == ci.u && cj.v == ci.v) && !(ci.u < cj.u) && !(cj.v < ci.v);
        }
      }
      if (!nested) pick = i;
    }
    if (!pick) throw InvariantViolation("no outermost peripheral arc");
    vt = transport(std::move(vt), {*pick});
    if (!vt.triangulation[*pick].is_bridging()) throw InvariantViolation("outermost peripheral flip stayed peripheral");
    done.push_back(*pick);
  }
  return done;
}

UnitarizeResult unitarize(const Triangulation& start, const std::vector<BigInt>& values) {
  if (!start.all_bridging()) throw DomainError("unitarize needs an all-bridging triangulation");
  check_values(start, values);
  const auto reject = [] { throw DomainError("input is not a positive integral frieze vector"); };
  UnitarizeResult out{start, {}, {values}, {}};
  std::vector<BigInt> v = values;
  for (;;) {
    const auto top = std::max_element(v.begin(), v.end());
    if (*top == 1) break;
    const auto i = static_cast<std::size_t>(top - v.begin());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!out.triangulation[j].is_bridging() && v[j] != 1) reject();
    }
    auto r = flip(out.triangulation, i);
    const BigInt num = exchange_numerator(r.quad, v);
    if (num % v[i] != 0) reject();
    const BigInt fresh = num / v[i];
    if (fresh <= 0 || fresh >= v[i]) reject();
    if (!r.new_arc.is_bridging() && fresh != 1) reject();
    const auto bridging = [&](const Label& l) { return l && out.triangulation[*l].is_bridging(); };
    const bool same_monomial = (bridging(r.quad.a) && bridging(r.quad.c)) || (bridging(r.quad.b) && bridging(r.quad.d));
    out.steps.push_back({i, out.triangulation[i], r.new_arc, v[i], fresh, same_monomial});
    v[i] = fresh;
    out.triangulation = std::move(r.triangulation);
    out.flips.push_back(i);
    out.trace.push_back(v);
  }
  return out;
}

}  // namespace friezekit
