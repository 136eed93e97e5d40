#include "friezekit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace friezekit {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::string label_name(const EdgeLabel& l) { return l ? "x" + std::to_string(*l + 1) : "1"; }

EdgeLabel label_from_name(const std::string& s, std::size_t nvars) {
  if (s == "1") return std::nullopt;
  try {
    if (s.size() >= 2 && s[0] == 'x') {
      const auto k = std::stoul(s.substr(1));
      if (k >= 1 && k <= nvars) return k - 1;
    }
  } catch (const std::exception&) {
  }
  throw FormatError("bad snake label \"" + s + "\"");
}

}  // namespace

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrow_list()) {
    if (a.multiplicity == 1) {
      arrows.push_back({a.source, a.target});
    } else {
      arrows.push_back({a.source, a.target, a.multiplicity});
    }
  }
  return {{"n", q.size()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j) {
  if (j.is_object() && j.contains("matrix")) {
    return Quiver::from_matrix(get<std::vector<std::vector<int>>>(j, "matrix"));
  }
  const auto n = get<std::size_t>(j, "n");
  std::vector<Quiver::Arrow> arrows;
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() < 2 || a.size() > 3) throw FormatError("arrow must be [source, target(, multiplicity)]");
      try {
        arrows.push_back({a[0].get<std::size_t>(), a[1].get<std::size_t>(), a.size() == 3 ? a[2].get<int>() : 1});
      } catch (const nlohmann::json::exception&) {
        throw FormatError("arrow entries must be non-negative integers");
      }
    }
  }
  return Quiver::from_arrows(n, arrows);
}

Json seed_to_json(const Seed& s) {
  Json vars = Json::array();
  for (const auto& v : s.vars) vars.push_back(v.to_string());
  Quiver base = s.quiver;
  for (auto it = s.path.rbegin(); it != s.path.rend(); ++it) base = mutate_quiver(base, *it);
  return {{"quiver", quiver_to_json(base)}, {"path", s.path}, {"variables", vars}};
}

Seed seed_from_json(const Json& j) {
  if (j.is_object() && j.contains("quiver")) {
    Seed base = Seed::base(quiver_from_json(j.at("quiver")));
    if (!j.contains("path")) return base;
    return mutate_along(base, get<std::vector<std::size_t>>(j, "path"));
  }
  return Seed::base(quiver_from_json(j));
}

Json arc_to_json(const Arc& a) {
  switch (a.kind) {
    case ArcKind::Bridging:
      return {{"kind", "bridging"}, {"outer", a.first}, {"inner", a.second}, {"winding", a.winding}};
    case ArcKind::PeripheralOuter:
      return {{"kind", "peripheral-outer"}, {"start", a.first}, {"span", a.second}};
    case ArcKind::PeripheralInner:
      return {{"kind", "peripheral-inner"}, {"start", a.first}, {"span", a.second}};
  }
  throw InvariantViolation("unknown arc kind");
}

Arc arc_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "bridging") return Arc::bridging(get<int>(j, "outer"), get<int>(j, "inner"), get<long>(j, "winding"));
  if (kind == "peripheral-outer") return Arc::peripheral_outer(get<int>(j, "start"), get<int>(j, "span"));
  if (kind == "peripheral-inner") return Arc::peripheral_inner(get<int>(j, "start"), get<int>(j, "span"));
  throw FormatError("unknown arc kind \"" + kind + "\"");
}

Json triangulation_to_json(const Triangulation& t) {
  Json arcs = Json::array();
  for (const auto& a : t.arcs()) arcs.push_back(arc_to_json(a));
  return {{"p", t.annulus().p}, {"q", t.annulus().q}, {"arcs", arcs}};
}

Triangulation triangulation_from_json(const Json& j) {
  std::vector<Arc> arcs;
  if (!j.contains("arcs") || !j.at("arcs").is_array()) throw FormatError("missing arc list");
  for (const auto& a : j.at("arcs")) arcs.push_back(arc_from_json(a));
  return Triangulation(MarkedAnnulus(get<int>(j, "p"), get<int>(j, "q")), std::move(arcs));
}

Json polygon_to_json(const PolygonTriangulation& t) {
  Json d = Json::array();
  for (const auto& [a, b] : t.diagonals()) d.push_back({a, b});
  return {{"m", t.vertices()}, {"diagonals", d}};
}

PolygonTriangulation polygon_from_json(const Json& j) {
  std::vector<Diagonal> d;
  for (const auto& pair : get<std::vector<std::vector<int>>>(j, "diagonals")) {
    if (pair.size() != 2) throw FormatError("diagonal must be [a, b]");
    d.emplace_back(pair[0], pair[1]);
  }
  return PolygonTriangulation(get<int>(j, "m"), std::move(d));
}

Json snake_to_json(const SnakeGraph& g) {
  Json tiles = Json::array();
  for (const auto& t : g.tiles) {
    tiles.push_back({{"label", label_name(t.label)},
                     {"edges", {{"n", label_name(t.n)}, {"e", label_name(t.e)}, {"s", label_name(t.s)}, {"w", label_name(t.w)}}}});
  }
  Json turns = Json::array();
  for (auto d : g.turns) turns.push_back(d == Turn::East ? "E" : "N");
  return {{"tiles", tiles}, {"turns", turns}};
}

SnakeGraph snake_from_json(const Json& j, std::size_t nvars) {
  SnakeGraph g;
  g.nvars = nvars;
  if (!j.contains("tiles") || !j.at("tiles").is_array()) throw FormatError("missing tile list");
  for (const auto& t : j.at("tiles")) {
    SnakeTile tile;
    const auto label = label_from_name(get<std::string>(t, "label"), nvars);
    if (!label) throw FormatError("tile label cannot be 1");
    tile.label = *label;
    if (!t.contains("edges")) throw FormatError("missing field \"edges\"");
    const auto& e = t.at("edges");
    tile.n = label_from_name(get<std::string>(e, "n"), nvars);
    tile.e = label_from_name(get<std::string>(e, "e"), nvars);
    tile.s = label_from_name(get<std::string>(e, "s"), nvars);
    tile.w = label_from_name(get<std::string>(e, "w"), nvars);
    g.tiles.push_back(tile);
  }
  for (const auto& d : get<std::vector<std::string>>(j, "turns")) {
    if (d != "E" && d != "N") throw FormatError("turn must be \"E\" or \"N\"");
    g.turns.push_back(d == "E" ? Turn::East : Turn::North);
  }
  if (g.turns.size() + 1 != std::max<std::size_t>(g.tiles.size(), 1)) throw FormatError("need one turn per gluing");
  return g;
}

Json frieze_to_json(const FriezeArray& a) {
  Json cols = Json::array();
  for (const auto& col : a.columns) {
    Json c = Json::array();
    for (const auto& v : col) c.push_back(v.to_string());
    cols.push_back(c);
  }
  const RingKind kind = a.columns.empty() || a.columns.front().empty() ? RingKind::Integer : a.columns.front().front().kind();
  return {{"ring", std::string(ring_tag(kind))}, {"quiver", quiver_to_json(a.quiver)}, {"first_column", a.first_column}, {"columns", cols}};
}

FriezeArray frieze_from_json(const Json& j) {
  const RingKind kind = ring_from_tag(get<std::string>(j, "ring"));
  FriezeArray a{quiver_from_json(j.at("quiver")), get<long>(j, "first_column"), {}};
  for (const auto& col : get<std::vector<std::vector<std::string>>>(j, "columns")) {
    if (col.size() != a.quiver.size()) throw FormatError("column length differs from the quiver size");
    std::vector<RingElement> vals;
    for (const auto& s : col) vals.push_back(parse_ring_literal(s, kind));
    a.columns.push_back(std::move(vals));
  }
  return a;
}

std::vector<RingElement> parse_ring_list(const std::string& text, RingKind kind) {
  const char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::vector<RingElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) throw FormatError("empty entry in value list \"" + text + "\"");
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    out.push_back(parse_ring_literal(item, kind));
  }
  if (out.empty()) throw FormatError("empty value list");
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace friezekit
