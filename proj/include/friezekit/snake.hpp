#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "friezekit/laurent.hpp"
#include "friezekit/quiver.hpp"
#include "friezekit/rings.hpp"

namespace friezekit {

/// A diagonal (a, b) of a polygon with vertices 0..m-1, stored with a < b.
using Diagonal = std::pair<int, int>;

/// Triangulation of an m-gon by m - 3 diagonals; the position of a diagonal
/// is the id of its cluster variable and is kept by flips.
class PolygonTriangulation {
 public:
  /// Throws DomainError unless the diagonals are m - 3 distinct, pairwise
  /// non-crossing, non-side chords.
  PolygonTriangulation(int m, std::vector<Diagonal> diagonals);

  int vertices() const { return m_; }
  std::size_t size() const { return diagonals_.size(); }
  const Diagonal& operator[](std::size_t i) const { return diagonals_.at(i); }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  std::optional<std::size_t> find(int a, int b) const;
  bool is_side(int a, int b) const;
  /// All m - 2 triangles, vertices ascending.
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

  friend bool operator==(const PolygonTriangulation& x, const PolygonTriangulation& y) {
    return x.m_ == y.m_ && x.diagonals_ == y.diagonals_;
  }

 private:
  int m_;
  std::vector<Diagonal> diagonals_;
  std::vector<std::array<int, 3>> triangles_;
};

Diagonal make_diagonal(int a, int b);
bool diagonals_cross(const Diagonal& x, const Diagonal& y);

/// Fan at vertex 0: diagonals (0,2), (0,3), ..., (0,m-2).
PolygonTriangulation polygon_fan(int m);
PolygonTriangulation polygon_flip(const PolygonTriangulation& t, std::size_t i);
/// In every triangle a < b < c the arrows run (a,b) -> (b,c) -> (a,c) -> (a,b)
/// between diagonals.
Quiver quiver_of(const PolygonTriangulation& t);

/// Edge label: a cluster variable id, or nullopt for the unit label "1".
using EdgeLabel = std::optional<std::size_t>;

enum class Turn { East, North };

struct SnakeTile {
  std::size_t label = 0;
  EdgeLabel n, e, s, w;
  std::array<int, 4> corners{};  ///< polygon vertices at SW, SE, NE, NW

  /// Labels only; corners are bookkeeping.
  friend bool operator==(const SnakeTile& x, const SnakeTile& y) {
    return x.label == y.label && x.n == y.n && x.e == y.e && x.s == y.s && x.w == y.w;
  }
};

/// Tiles glued in order, tile j+1 to the north or east of tile j. The empty
/// graph stands for a variable of the cluster itself.
struct SnakeGraph {
  std::size_t nvars = 0;
  std::vector<SnakeTile> tiles;
  std::vector<Turn> turns;

  bool empty() const { return tiles.empty(); }
  /// Interior tile j is straight when it is entered and left in the same direction.
  bool straight(std::size_t j) const;
  friend bool operator==(const SnakeGraph&, const SnakeGraph&) = default;
};

/// Throws DomainError("zero graph: variable is in the cluster") if gamma is in t.
SnakeGraph build_snake_graph(Diagonal gamma, const PolygonTriangulation& t);

/// Smallest representative under the planar symmetries preserving a
/// north/east snake (all eight for a single tile).
SnakeGraph canonical_form(const SnakeGraph& g);
bool equivalent(const SnakeGraph& x, const SnakeGraph& y);

/// Enumerates perfect matchings of the tile graph.
std::size_t count_matchings_brute(const SnakeGraph& g);
/// Two-term transfer recurrence along the tiles.
BigInt count_matchings_transfer(const SnakeGraph& g);
/// Transfer count, cross-checked against enumeration up to 24 tiles.
BigInt count_matchings(const SnakeGraph& g);

/// Sum of matching weights over the product of tile labels.
LaurentPolynomial snake_laurent(const SnakeGraph& g);

enum class SnakeRule {
  RemoveTerminal,  ///< a first or last tile labelled i disappears
  GlueTerminal,    ///< a tile is glued to a terminal edge labelled i
  Straight,        ///< middle tile i of a straight triple
  Bent,            ///< middle tile i of a bent triple disappears
  Unbend           ///< a tile is inserted at the interior edge i
};

std::string to_string(SnakeRule r);

struct SnakeMutation {
  SnakeGraph graph;
  SnakeRule rule;
};

/// Mutation of g in direction i; labels of the result refer to
/// polygon_flip(t, i), where t is the triangulation g was built from (it
/// supplies the far vertex for the gluing rules). Throws DomainError if i is
/// neither a tile label nor a terminal or interior edge label.
SnakeMutation mutate_snake(const SnakeGraph& g, std::size_t i, const PolygonTriangulation& t);

std::string render_snake(const SnakeGraph& g);

}  // namespace friezekit
