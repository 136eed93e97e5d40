#include "friezekit/snake.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace friezekit {

Diagonal make_diagonal(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

bool diagonals_cross(const Diagonal& x, const Diagonal& y) {
  const auto inside = [&](int v) { return x.first < v && v < x.second; };
  const bool shared = x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second;
  return !shared && inside(y.first) != inside(y.second);
}

PolygonTriangulation::PolygonTriangulation(int m, std::vector<Diagonal> diagonals) : m_(m) {
  if (m < 3) throw DomainError("polygon needs at least 3 vertices");
  if (diagonals.size() != static_cast<std::size_t>(m - 3)) {
    throw DomainError("triangulation of a " + std::to_string(m) + "-gon needs " + std::to_string(m - 3) + " diagonals");
  }
  for (auto& d : diagonals) {
    d = make_diagonal(d.first, d.second);
    if (d.first < 0 || d.second >= m) throw DomainError("diagonal vertex out of range");
    if (is_side(d.first, d.second) || d.first == d.second) throw DomainError("diagonal joins adjacent vertices");
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals[i] == diagonals[j]) throw DomainError("repeated diagonal");
      if (diagonals_cross(diagonals[i], diagonals[j])) throw DomainError("crossing diagonals");
    }
  }
  diagonals_ = std::move(diagonals);
  const auto edge = [&](int a, int b) { return is_side(a, b) || find(a, b).has_value(); };
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!edge(a, b)) continue;
      for (int c = b + 1; c < m; ++c) {
        if (edge(b, c) && edge(a, c)) triangles_.push_back({a, b, c});
      }
    }
  }
  if (triangles_.size() != static_cast<std::size_t>(m - 2)) throw InvariantViolation("polygon triangle count");
}

std::optional<std::size_t> PolygonTriangulation::find(int a, int b) const {
  const auto d = make_diagonal(a, b);
  const auto it = std::find(diagonals_.begin(), diagonals_.end(), d);
  if (it == diagonals_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - diagonals_.begin());
}

bool PolygonTriangulation::is_side(int a, int b) const {
  const int d = std::abs(a - b);
  return d == 1 || d == m_ - 1;
}

PolygonTriangulation polygon_fan(int m) {
  std::vector<Diagonal> d;
  for (int k = 2; k <= m - 2; ++k) d.emplace_back(0, k);
  return PolygonTriangulation(m, std::move(d));
}

namespace {

bool has_vertex(const std::array<int, 3>& tri, int v) { return std::find(tri.begin(), tri.end(), v) != tri.end(); }

bool has_side(const std::array<int, 3>& tri, const Diagonal& d) {
  return has_vertex(tri, d.first) && has_vertex(tri, d.second);
}

int apex(const std::array<int, 3>& tri, const Diagonal& d) {
  for (int v : tri) {
    if (v != d.first && v != d.second) return v;
  }
  throw InvariantViolation("degenerate triangle");
}

std::array<int, 3> make_triangle(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// The two triangles of t on diagonal d.
std::pair<std::array<int, 3>, std::array<int, 3>> triangles_on(const PolygonTriangulation& t, const Diagonal& d) {
  std::vector<std::array<int, 3>> found;
  for (const auto& tri : t.triangles()) {
    if (has_side(tri, d)) found.push_back(tri);
  }
  if (found.size() != 2) throw InvariantViolation("diagonal must bound two triangles");
  return {found[0], found[1]};
}

}  // namespace

PolygonTriangulation polygon_flip(const PolygonTriangulation& t, std::size_t i) {
  if (i >= t.size()) throw DomainError("flip index " + std::to_string(i) + " out of range");
  const auto [x, y] = triangles_on(t, t[i]);
  auto d = t.diagonals();
  d[i] = make_diagonal(apex(x, t[i]), apex(y, t[i]));
  return PolygonTriangulation(t.vertices(), std::move(d));
}

Quiver quiver_of(const PolygonTriangulation& t) {
  std::vector<std::vector<int>> b(t.size(), std::vector<int>(t.size(), 0));
  for (const auto& tri : t.triangles()) {
    const std::array<std::optional<std::size_t>, 3> cyc{t.find(tri[0], tri[1]), t.find(tri[1], tri[2]),
                                                        t.find(tri[0], tri[2])};
    for (int k = 0; k < 3; ++k) {
      const auto& from = cyc[k];
      const auto& to = cyc[(k + 1) % 3];
      if (!from || !to) continue;
      ++b[*from][*to];
      --b[*to][*from];
    }
  }
  return Quiver::from_matrix(std::move(b));
}

bool SnakeGraph::straight(std::size_t j) const {
  if (j == 0 || j + 1 >= tiles.size()) throw DomainError("straightness is defined for interior tiles only");
  return turns[j - 1] == turns[j];
}

namespace {

// Triangles crossed by an arc and the diagonals between them.
struct Chain {
  std::vector<std::array<int, 3>> triangles;
  std::vector<Diagonal> crossed;
};

EdgeLabel edge_label(const PolygonTriangulation& t, int a, int b) {
  if (t.is_side(a, b)) return std::nullopt;
  auto id = t.find(a, b);
  if (!id) throw InvariantViolation("tile side is not an edge of the triangulation");
  return id;
}

SnakeGraph layout(const Chain& c, const PolygonTriangulation& t) {
  SnakeGraph g;
  g.nvars = t.size();
  const std::size_t d = c.crossed.size();
  for (std::size_t j = 0; j < d; ++j) {
    const Diagonal tau = c.crossed[j];
    const int sw = apex(c.triangles[j], tau);
    const int ne = apex(c.triangles[j + 1], tau);
    int se = tau.first, nw = tau.second;
    if (j == 0) {
      if (d > 1 && (se == c.crossed[1].first || se == c.crossed[1].second)) std::swap(se, nw);
    } else {
      const auto& prev = g.tiles.back();
      const bool east = g.turns.back() == Turn::East;
      const int shared = prev.corners[2];
      if (east ? nw != shared : se != shared) std::swap(se, nw);
      if ((east ? prev.corners[1] : prev.corners[3]) != sw) throw InvariantViolation("snake gluing mismatch");
    }
    SnakeTile tile;
    tile.label = *t.find(tau.first, tau.second);
    tile.corners = {sw, se, ne, nw};
    tile.n = edge_label(t, nw, ne);
    tile.e = edge_label(t, ne, se);
    tile.s = edge_label(t, sw, se);
    tile.w = edge_label(t, sw, nw);
    g.tiles.push_back(tile);
    if (j + 1 < d) {
      const auto& next = c.crossed[j + 1];
      g.turns.push_back(se != next.first && se != next.second ? Turn::East : Turn::North);
    }
  }
  return g;
}

Chain chain_of(Diagonal gamma, const PolygonTriangulation& t) {
  Chain c;
  const int s = gamma.first, target = gamma.second;
  for (const auto& tri : t.triangles()) {
    if (!has_vertex(tri, s)) continue;
    std::array<int, 2> opp{};
    int k = 0;
    for (int v : tri) {
      if (v != s) opp[k++] = v;
    }
    if (diagonals_cross(gamma, make_diagonal(opp[0], opp[1]))) {
      c.triangles.push_back(tri);
      c.crossed.push_back(make_diagonal(opp[0], opp[1]));
      break;
    }
  }
  if (c.triangles.empty()) throw InvariantViolation("arc leaves its start vertex through no triangle");
  while (!has_vertex(c.triangles.back(), target)) {
    const auto [x, y] = triangles_on(t, c.crossed.back());
    const auto next = x == c.triangles.back() ? y : x;
    c.triangles.push_back(next);
    std::optional<Diagonal> exit;
    for (int k = 0; k < 3; ++k) {
      const auto side = make_diagonal(next[k], next[(k + 1) % 3]);
      if (side != c.crossed.back() && diagonals_cross(gamma, side)) exit = side;
    }
    if (exit) {
      c.crossed.push_back(*exit);
    } else if (!has_vertex(next, target)) {
      throw InvariantViolation("arc stops inside the polygon");
    }
  }
  return c;
}

Chain chain_of(const SnakeGraph& g) {
  Chain c;
  if (g.empty()) return c;
  const auto& first = g.tiles.front().corners;
  c.triangles.push_back(make_triangle(first[0], first[1], first[3]));
  for (const auto& tile : g.tiles) {
    const auto& k = tile.corners;
    c.crossed.push_back(make_diagonal(k[3], k[1]));
    c.triangles.push_back(make_triangle(k[3], k[1], k[2]));
  }
  return c;
}

}  // namespace

SnakeGraph build_snake_graph(Diagonal gamma, const PolygonTriangulation& t) {
  gamma = make_diagonal(gamma.first, gamma.second);
  if (gamma.first < 0 || gamma.second >= t.vertices() || t.is_side(gamma.first, gamma.second) ||
      gamma.first == gamma.second) {
    throw DomainError("not a diagonal of the polygon");
  }
  if (t.find(gamma.first, gamma.second)) throw DomainError("zero graph: variable is in the cluster");
  return layout(chain_of(gamma, t), t);
}

namespace {

SnakeTile reflect_diagonal(SnakeTile t) {
  std::swap(t.n, t.e);
  std::swap(t.s, t.w);
  std::swap(t.corners[1], t.corners[3]);
  return t;
}

SnakeTile rotate_half(SnakeTile t) {
  std::swap(t.n, t.s);
  std::swap(t.e, t.w);
  std::swap(t.corners[0], t.corners[2]);
  std::swap(t.corners[1], t.corners[3]);
  return t;
}

SnakeTile rotate_quarter(SnakeTile t) {
  const SnakeTile o = t;
  t.n = o.e;
  t.e = o.s;
  t.s = o.w;
  t.w = o.n;
  t.corners = {o.corners[1], o.corners[2], o.corners[3], o.corners[0]};
  return t;
}

SnakeGraph reflect_diagonal(const SnakeGraph& g) {
  SnakeGraph out = g;
  for (auto& t : out.tiles) t = reflect_diagonal(t);
  for (auto& d : out.turns) d = d == Turn::East ? Turn::North : Turn::East;
  return out;
}

SnakeGraph rotate_half(const SnakeGraph& g) {
  SnakeGraph out = g;
  std::reverse(out.tiles.begin(), out.tiles.end());
  std::reverse(out.turns.begin(), out.turns.end());
  for (auto& t : out.tiles) t = rotate_half(t);
  return out;
}

std::vector<long> signature(const SnakeGraph& g) {
  const auto code = [](const EdgeLabel& l) { return l ? static_cast<long>(*l) : -1L; };
  std::vector<long> sig;
  for (auto d : g.turns) sig.push_back(d == Turn::East ? 0 : 1);
  for (const auto& t : g.tiles) {
    sig.insert(sig.end(), {static_cast<long>(t.label), code(t.n), code(t.e), code(t.s), code(t.w)});
  }
  return sig;
}

}  // namespace

SnakeGraph canonical_form(const SnakeGraph& g) {
  std::vector<SnakeGraph> images;
  if (g.tiles.size() == 1) {
    SnakeGraph r = g;
    for (int k = 0; k < 4; ++k) {
      images.push_back(r);
      images.push_back(reflect_diagonal(r));
      r.tiles[0] = rotate_quarter(r.tiles[0]);
    }
  } else {
    images = {g, reflect_diagonal(g), rotate_half(g), rotate_half(reflect_diagonal(g))};
  }
  return *std::min_element(images.begin(), images.end(), [](const SnakeGraph& a, const SnakeGraph& b) {
    return signature(a) < signature(b);
  });
}

bool equivalent(const SnakeGraph& x, const SnakeGraph& y) {
  return x.nvars == y.nvars && canonical_form(x) == canonical_form(y);
}

namespace {

struct TileGraph {
  std::size_t vertices = 0;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // (neighbour, edge)
  std::vector<EdgeLabel> labels;
};

TileGraph tile_graph(const SnakeGraph& g) {
  TileGraph out;
  std::map<std::pair<long, long>, std::size_t> index;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edges;
  const auto vertex = [&](long x, long y) {
    auto [it, fresh] = index.emplace(std::make_pair(x, y), index.size());
    if (fresh) out.adj.emplace_back();
    return it->second;
  };
  const auto edge = [&](std::size_t a, std::size_t b, const EdgeLabel& l) {
    const auto key = std::minmax(a, b);
    auto it = edges.find(key);
    if (it != edges.end()) {
      if (out.labels[it->second] != l) throw InvariantViolation("glued edges carry different labels");
      return;
    }
    edges.emplace(key, out.labels.size());
    out.adj[a].push_back({b, out.labels.size()});
    out.adj[b].push_back({a, out.labels.size()});
    out.labels.push_back(l);
  };
  long x = 0, y = 0;
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    if (j > 0) (g.turns[j - 1] == Turn::East ? x : y) += 1;
    const auto sw = vertex(x, y), se = vertex(x + 1, y), ne = vertex(x + 1, y + 1), nw = vertex(x, y + 1);
    const auto& t = g.tiles[j];
    edge(nw, ne, t.n);
    edge(ne, se, t.e);
    edge(sw, se, t.s);
    edge(sw, nw, t.w);
  }
  out.vertices = index.size();
  return out;
}

template <class Visit>
void each_matching(const TileGraph& tg, std::vector<std::size_t>& chosen, std::vector<bool>& used, Visit& visit) {
  std::size_t v = 0;
  while (v < tg.vertices && used[v]) ++v;
  if (v == tg.vertices) {
    visit(chosen);
    return;
  }
  used[v] = true;
  for (const auto& [u, e] : tg.adj[v]) {
    if (used[u]) continue;
    used[u] = true;
    chosen.push_back(e);
    each_matching(tg, chosen, used, visit);
    chosen.pop_back();
    used[u] = false;
  }
  used[v] = false;
}

template <class Visit>
void each_matching(const SnakeGraph& g, Visit visit) {
  const auto tg = tile_graph(g);
  std::vector<std::size_t> chosen;
  std::vector<bool> used(tg.vertices, false);
  const auto labelled = [&](const std::vector<std::size_t>& edges) {
    std::vector<EdgeLabel> ls;
    for (auto e : edges) ls.push_back(tg.labels[e]);
    visit(ls);
  };
  auto fn = labelled;
  each_matching(tg, chosen, used, fn);
}

}  // namespace

std::size_t count_matchings_brute(const SnakeGraph& g) {
  std::size_t n = 0;
  if (g.empty()) return 1;
  each_matching(g, [&](const std::vector<EdgeLabel>&) { ++n; });
  return n;
}

BigInt count_matchings_transfer(const SnakeGraph& g) {
  if (g.empty()) return 1;
  BigInt a = 2, b = 1;
  for (std::size_t j = 1; j < g.tiles.size(); ++j) {
    const BigInt next = a + b;
    if (j + 1 < g.tiles.size() && g.straight(j)) b = a;
    a = next;
  }
  return a;
}

BigInt count_matchings(const SnakeGraph& g) {
  BigInt n = count_matchings_transfer(g);
  if (g.tiles.size() <= 24 && n != count_matchings_brute(g)) {
    throw InvariantViolation("matching counts disagree");
  }
  return n;
}

LaurentPolynomial snake_laurent(const SnakeGraph& g) {
  if (g.empty()) throw DomainError("zero graph: variable is in the cluster");
  LaurentPolynomial sum(g.nvars);
  each_matching(g, [&](const std::vector<EdgeLabel>& ls) {
    Exponents e(g.nvars, 0);
    for (const auto& l : ls) {
      if (l) ++e[*l];
    }
    sum = sum + LaurentPolynomial::monomial(e, 1);
  });
  Exponents den(g.nvars, 0);
  for (const auto& t : g.tiles) --den[t.label];
  return sum * LaurentPolynomial::monomial(den, 1);
}

std::string to_string(SnakeRule r) {
  switch (r) {
    case SnakeRule::RemoveTerminal: return "remove-terminal";
    case SnakeRule::GlueTerminal: return "glue-terminal";
    case SnakeRule::Straight: return "straight";
    case SnakeRule::Bent: return "bent";
    case SnakeRule::Unbend: return "unbend";
  }
  return "?";
}

SnakeMutation mutate_snake(const SnakeGraph& g, std::size_t i, const PolygonTriangulation& t) {
  if (i >= t.size()) throw DomainError("mutation direction " + std::to_string(i) + " out of range");
  if (g.nvars != t.size()) throw DomainError("snake graph and triangulation disagree on the rank");
  const auto flipped = polygon_flip(t, i);
  Chain c = chain_of(g);
  const std::size_t d = c.crossed.size();
  const Diagonal old = t[i];
  const Diagonal fresh = flipped[i];

  const auto tile = std::find_if(g.tiles.begin(), g.tiles.end(), [&](const SnakeTile& x) { return x.label == i; });
  if (tile != g.tiles.end()) {
    const auto j = static_cast<std::size_t>(tile - g.tiles.begin());
    if (d == 1) return {SnakeGraph{flipped.size(), {}, {}}, SnakeRule::RemoveTerminal};
    const auto& k = tile->corners;
    const auto a = make_triangle(k[0], k[1], k[2]);
    const auto b = make_triangle(k[0], k[2], k[3]);
    const auto containing = [&](const Diagonal& side) { return has_side(a, side) ? a : b; };
    Chain out;
    SnakeRule rule;
    if (j == 0 || j + 1 == d) {
      rule = SnakeRule::RemoveTerminal;
      out = c;
      out.crossed.erase(out.crossed.begin() + static_cast<long>(j));
      if (j == 0) {
        out.triangles.erase(out.triangles.begin(), out.triangles.begin() + 2);
        out.triangles.insert(out.triangles.begin(), containing(c.crossed[1]));
      } else {
        out.triangles.resize(d - 1);
        out.triangles.push_back(containing(c.crossed[d - 2]));
      }
    } else {
      const auto in = containing(c.crossed[j - 1]);
      const auto outgoing = containing(c.crossed[j + 1]);
      out = c;
      if (in == outgoing) {
        rule = SnakeRule::Bent;
        out.crossed.erase(out.crossed.begin() + static_cast<long>(j));
        out.triangles.erase(out.triangles.begin() + static_cast<long>(j) + 1);
        out.triangles[j] = in;
      } else {
        rule = SnakeRule::Straight;
        out.crossed[j] = fresh;
        out.triangles[j] = in;
        out.triangles[j + 1] = outgoing;
      }
    }
    return {layout(out, flipped), rule};
  }

  for (std::size_t k = 0; k <= d; ++k) {
    if (!has_side(c.triangles[k], old)) continue;
    const auto [x, y] = triangles_on(t, old);
    const int far = apex(x == c.triangles[k] ? y : x, old);
    const int top = apex(c.triangles[k], old);
    const auto left = make_triangle(old.first, top, far);
    const auto right = make_triangle(old.second, top, far);
    Chain out = c;
    SnakeRule rule = SnakeRule::Unbend;
    if (k == 0) {
      rule = SnakeRule::GlueTerminal;
      const auto start = has_side(left, c.crossed[0]) ? right : left;
      out.triangles[0] = start;
      out.triangles.insert(out.triangles.begin() + 1, start == left ? right : left);
      out.crossed.insert(out.crossed.begin(), fresh);
    } else if (k == d) {
      rule = SnakeRule::GlueTerminal;
      const auto before = has_side(left, c.crossed[d - 1]) ? left : right;
      out.triangles[d] = before;
      out.triangles.push_back(before == left ? right : left);
      out.crossed.push_back(fresh);
    } else {
      const auto before = has_side(left, c.crossed[k - 1]) ? left : right;
      out.triangles[k] = before;
      out.triangles.insert(out.triangles.begin() + static_cast<long>(k) + 1, before == left ? right : left);
      out.crossed.insert(out.crossed.begin() + static_cast<long>(k), fresh);
    }
    return {layout(out, flipped), rule};
  }
  throw DomainError("label " + std::to_string(i + 1) + " does not occur in the snake graph");
}

std::string render_snake(const SnakeGraph& g) {
  if (g.empty()) return "(empty snake graph)\n";
  constexpr int W = 6, H = 2;
  std::vector<std::pair<long, long>> pos;
  long x = 0, y = 0;
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    if (j > 0) (g.turns[j - 1] == Turn::East ? x : y) += 1;
    pos.emplace_back(x, y);
  }
  const long cols = x + 1, rows = y + 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(rows * H + 1), std::string(static_cast<std::size_t>(cols * W + 1), ' '));
  const auto put = [&](long cx, long cy, char ch) {
    auto& cell = canvas[static_cast<std::size_t>(rows * H - cy)][static_cast<std::size_t>(cx)];
    if (cell == ' ' || ch == '+') cell = ch;
  };
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    const long x0 = pos[j].first * W, y0 = pos[j].second * H;
    for (long k = 0; k <= W; ++k) {
      put(x0 + k, y0, '-');
      put(x0 + k, y0 + H, '-');
    }
    for (long k = 0; k <= H; ++k) {
      put(x0, y0 + k, '|');
      put(x0 + W, y0 + k, '|');
    }
    for (long cx : {x0, x0 + W}) {
      for (long cy : {y0, y0 + H}) put(cx, cy, '+');
    }
    const std::string lab = "x" + std::to_string(g.tiles[j].label + 1);
    auto& row = canvas[static_cast<std::size_t>(rows * H - (y0 + 1))];
    row.replace(static_cast<std::size_t>(x0 + 1), lab.size(), lab);
  }
  std::ostringstream os;
  for (const auto& line : canvas) {
    const auto end = line.find_last_not_of(' ');
    os << line.substr(0, end == std::string::npos ? 0 : end + 1) << '\n';
  }
  const auto name = [](const EdgeLabel& l) { return l ? "x" + std::to_string(*l + 1) : std::string("1"); };
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    const auto& t = g.tiles[j];
    os << "tile " << j << " x" << t.label + 1 << ": n=" << name(t.n) << " e=" << name(t.e) << " s=" << name(t.s)
       << " w=" << name(t.w) << '\n';
  }
  os << "turns:";
  for (auto d : g.turns) os << ' ' << (d == Turn::East ? 'E' : 'N');
  os << '\n';
  return os.str();
}

}  // namespace friezekit
