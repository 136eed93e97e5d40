#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "friezekit/annulus.hpp"
#include "friezekit/cluster.hpp"
#include "friezekit/knit.hpp"
#include "friezekit/quiver.hpp"
#include "friezekit/rings.hpp"
#include "friezekit/snake.hpp"

namespace friezekit {

using Json = nlohmann::json;

/// Thrown on input that does not follow the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": 3, "arrows": [[source, target], [source, target, multiplicity], ...]}
/// or {"matrix": [[...], ...]}.
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

/// {"quiver": base quiver, "path": [k, ...]}; a bare quiver object is accepted as
/// the base seed.
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

/// {"kind": "bridging", "outer": o, "inner": i, "winding": w} or
/// {"kind": "peripheral-outer" | "peripheral-inner", "start": s, "span": l}.
Json arc_to_json(const Arc& a);
Arc arc_from_json(const Json& j);
/// {"p": p, "q": q, "arcs": [...]}
Json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

/// {"m": m, "diagonals": [[a, b], ...]}
Json polygon_to_json(const PolygonTriangulation& t);
PolygonTriangulation polygon_from_json(const Json& j);

/// {"tiles": [{"label": "x1", "edges": {"n": .., "e": .., "s": .., "w": ..}}], "turns": ["E", "N"]}
Json snake_to_json(const SnakeGraph& g);
SnakeGraph snake_from_json(const Json& j, std::size_t nvars);

/// {"ring": "Z", "quiver": {...}, "first_column": c, "columns": [["1", ...], ...]}
Json frieze_to_json(const FriezeArray& a);
FriezeArray frieze_from_json(const Json& j);

/// Values separated by ';' (or ',' when no ';' occurs).
std::vector<RingElement> parse_ring_list(const std::string& text, RingKind kind);

Json read_json_file(const std::string& path);

}  // namespace friezekit
