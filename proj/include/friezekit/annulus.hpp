#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "friezekit/quiver.hpp"
#include "friezekit/rings.hpp"

namespace friezekit {

/// Annulus with p marked points on the outer and q on the inner boundary.
/// Cluster algebras of type affine A_{p,q} have rank p + q.
struct MarkedAnnulus {
  int p = 1;
  int q = 1;

  MarkedAnnulus() = default;
  MarkedAnnulus(int outer, int inner);
  int rank() const { return p + q; }
  /// Deck translation in scaled cover coordinates: outer point o lifts to
  /// o*q + m*period, inner point i to i*p + m*period.
  long period() const { return static_cast<long>(p) * q; }
  friend bool operator==(const MarkedAnnulus&, const MarkedAnnulus&) = default;
};

enum class ArcKind { Bridging, PeripheralOuter, PeripheralInner };
enum class ArcClass { Transjective, Regular };

/// An arc up to isotopy. Bridging arcs join outer point `first` to inner
/// point `second`, winding `winding` times; peripheral arcs start at `first`
/// and cut off `second` - 1 boundary segments (2 <= span <= boundary size).
struct Arc {
  ArcKind kind = ArcKind::Bridging;
  int first = 0;
  int second = 0;
  long winding = 0;

  static Arc bridging(int outer, int inner, long winding) {
    return {ArcKind::Bridging, outer, inner, winding};
  }
  static Arc peripheral_outer(int start, int span) { return {ArcKind::PeripheralOuter, start, span, 0}; }
  static Arc peripheral_inner(int start, int span) { return {ArcKind::PeripheralInner, start, span, 0}; }

  bool is_bridging() const { return kind == ArcKind::Bridging; }
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::ostream& operator<<(std::ostream& os, const Arc& a);
std::string to_string(const Arc& a);

/// Throws DomainError if the arc does not exist in the annulus.
void validate_arc(const Arc& a, const MarkedAnnulus& annulus);

ArcClass classify_arc(const Arc& a);

bool arcs_cross(const Arc& a, const Arc& b, const MarkedAnnulus& annulus);

/// A triangulation: p + q pairwise compatible arcs. Arc positions are the
/// vertices of the associated quiver and are preserved by flips.
class Triangulation {
 public:
  /// Throws DomainError on a wrong arc count, invalid or crossing arcs.
  Triangulation(MarkedAnnulus annulus, std::vector<Arc> arcs);

  const MarkedAnnulus& annulus() const { return annulus_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  const Arc& operator[](std::size_t i) const { return arcs_.at(i); }
  bool all_bridging() const;
  /// Same arcs regardless of position.
  bool same_arcs(const Triangulation& other) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  MarkedAnnulus annulus_;
  std::vector<Arc> arcs_;
};

/// The canonical all-bridging triangulation. Its arcs follow the lattice path
/// that fans out from outer point 0 and then walks along the inner point q-1,
/// listed backwards starting from Bridging(0, q-1, 0); for (1,2) the quiver
/// is exactly 2->1, 1->0, 2->0.
Triangulation fan_triangulation(const MarkedAnnulus& annulus);

/// Sides of the quadrilateral around a flipped arc, in cyclic order; the
/// exchange relation is x x' = x_a x_c + x_b x_d. nullopt marks a boundary
/// segment.
struct Quadrilateral {
  std::optional<std::size_t> a, b, c, d;
};

struct FlipResult {
  Triangulation triangulation;
  Arc new_arc;
  Quadrilateral quad;
};

FlipResult flip(const Triangulation& t, std::size_t k);

/// One vertex per arc, one arrow per pair of arcs meeting at a triangle
/// corner (orientation fixed by the surface), 2-cycles cancelled.
Quiver quiver_of(const Triangulation& t);

/// A triangulation together with positive integer frieze values on its arcs.
struct ValuedTriangulation {
  Triangulation triangulation;
  std::vector<BigInt> values;
};

/// Applies the flips in `path`, computing each new value from the exchange
/// relation (boundary segments count 1). Throws DomainError if a quotient is
/// not an integer.
ValuedTriangulation transport(ValuedTriangulation start, const std::vector<std::size_t>& path);

/// Repeatedly flips the lowest-index peripheral arc not nested inside another
/// peripheral arc until the triangulation is all-bridging; each such flip
/// yields a bridging arc. Returns the flips performed.
std::vector<std::size_t> reduce_to_bridging(ValuedTriangulation& vt);

struct UnitarizeStep {
  std::size_t index;
  Arc old_arc;
  Arc new_arc;
  BigInt old_value;
  BigInt new_value;
  /// True when the two bridging sides lie in the same exchange monomial,
  /// i.e. new value = (F(x_a) F(x_c) + 1) / F(x_i); the new arc is then bridging.
  bool bridging_monomial;
};

struct UnitarizeResult {
  Triangulation triangulation;
  std::vector<std::size_t> flips;
  std::vector<std::vector<BigInt>> trace;  ///< values before each flip and at the end
  std::vector<UnitarizeStep> steps;
};

/// Descent to the all-ones cluster: flip an arc of maximal value (lowest
/// index on ties) until every value is 1. Each step must strictly decrease
/// the flipped value and a new peripheral arc must get value 1; otherwise the
/// input is rejected with DomainError("input is not a positive integral
/// frieze vector"). The start must be all-bridging.
UnitarizeResult unitarize(const Triangulation& start, const std::vector<BigInt>& values);

}  // namespace friezekit
