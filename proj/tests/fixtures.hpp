#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "friezekit/annulus.hpp"
#include "friezekit/cluster.hpp"
#include "friezekit/frieze.hpp"
#include "friezekit/json_io.hpp"
#include "friezekit/knit.hpp"
#include "friezekit/snake.hpp"

namespace fixtures {

using namespace friezekit;

// 1 -> 2 <- 3 in 0-based vertices.
inline Quiver a3_quiver() { return Quiver::from_arrows(3, {{0, 1, 1}, {2, 1, 1}}); }
// 2 -> 1, 1 -> 0, 2 -> 0.
inline Quiver a12_quiver() { return Quiver::from_arrows(3, {{2, 1, 1}, {1, 0, 1}, {2, 0, 1}}); }
inline Quiver a2_quiver() { return Quiver::from_arrows(2, {{0, 1, 1}}); }

inline std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

inline const std::vector<std::vector<BigInt>>& a3_frieze_vectors() {
  static const std::vector<std::vector<BigInt>> v{
      ints({1, 1, 1}), ints({1, 1, 2}), ints({1, 2, 1}), ints({1, 2, 3}), ints({1, 3, 2}), ints({2, 1, 1}),
      ints({2, 1, 2}), ints({2, 3, 1}), ints({2, 3, 4}), ints({2, 5, 2}), ints({3, 2, 1}), ints({3, 2, 3}),
      ints({3, 5, 3}), ints({4, 3, 2})};
  return v;
}

inline const std::vector<std::vector<BigInt>>& a3_b_vectors() {
  static const std::vector<std::vector<BigInt>> v{
      ints({2, 2, 2}), ints({2, 3, 1}), ints({3, 1, 3}), ints({3, 2, 1}), ints({4, 1, 2}), ints({1, 3, 2}),
      ints({1, 5, 1}), ints({2, 1, 4}), ints({2, 3, 1}), ints({3, 1, 3}), ints({1, 2, 3}), ints({1, 5, 1}),
      ints({2, 2, 2}), ints({1, 3, 2})};
  return v;
}

// Rows are vertices 0, 1, 2 of the A3 quiver; entries read columns 3, 2, 1, 0.
using Table = std::vector<std::vector<std::string>>;

inline const Table& a3_symbolic_table() {
  static const Table t{{"x3", "(x1*x3 + x2 + 1)/(x2*x3)", "(x2 + 1)/x1", "x1"},
                       {"x2", "(x1*x3 + 1)/x2", "(x2^2 + 2*x2 + 1 + x1*x3)/(x1*x2*x3)", "x2"},
                       {"x1", "(x1*x3 + x2 + 1)/(x1*x2)", "(x2 + 1)/x3", "x3"}};
  return t;
}

struct Specialization {
  RingKind ring;
  Table values;
};

inline const std::vector<Specialization>& a3_specializations() {
  static const std::vector<Specialization> s{
      {RingKind::Integer, {{"1", "3", "2", "1"}, {"1", "2", "5", "1"}, {"1", "3", "2", "1"}}},
      {RingKind::Integer, {{"-1", "-1", "2", "1"}, {"1", "0", "-3", "1"}, {"1", "1", "-2", "-1"}}},
      {RingKind::Gaussian, {{"i", "-1-2i", "1+i", "1"}, {"i", "1-i", "-3i", "i"}, {"1", "2-i", "1-i", "i"}}},
      {RingKind::QuadraticD3,
       {{"(2+0s)/2", "(4-2s)/2", "(3+1s)/2", "(2+0s)/2"},
        {"(1+1s)/2", "(2-2s)/2", "(7-1s)/2", "(1+1s)/2"},
        {"(2+0s)/2", "(4-2s)/2", "(3+1s)/2", "(2+0s)/2"}}}};
  return s;
}

// Columns n = -2 .. 5 at vertices 0, 1, 2.
inline const std::vector<std::vector<BigInt>>& ones_columns() {
  static const std::vector<std::vector<BigInt>> c{
      ints({11, 26, 41}),  ints({2, 3, 7}),          ints({1, 1, 1}),       ints({7, 3, 2}),
      ints({41, 26, 11}), ints({362, 153, 97}), ints({2131, 1351, 571}), ints({18817, 7953, 5042})};
  return c;
}

inline const std::vector<std::vector<BigInt>>& one_two_one_columns() {
  static const std::vector<std::vector<BigInt>> c{
      ints({5, 18, 13}),   ints({3, 2, 7}),     ints({1, 2, 1}),     ints({7, 2, 3}),
      ints({13, 18, 5}), ints({123, 34, 47}), ints({233, 322, 89}), ints({2207, 610, 843})};
  return c;
}

inline std::vector<RingElement> ring_values(const std::vector<BigInt>& v) { return to_ring(v); }

// Hexagon triangulation whose quiver is the A3 quiver with matching labels.
inline PolygonTriangulation a3_hexagon() { return PolygonTriangulation(6, {{0, 2}, {2, 5}, {3, 5}}); }

inline PolygonTriangulation flip_along(PolygonTriangulation t, const std::vector<std::size_t>& path) {
  for (auto k : path) t = polygon_flip(t, k);
  return t;
}

// Laurent expansion of every diagonal in the cluster of t, by mutation paths.
inline std::map<Diagonal, LaurentPolynomial> diagonal_expansions(const PolygonTriangulation& t) {
  std::map<Diagonal, LaurentPolynomial> out;
  std::deque<std::pair<PolygonTriangulation, Seed>> queue{{t, Seed::base(quiver_of(t))}};
  std::set<std::set<Diagonal>> seen;
  while (!queue.empty()) {
    auto [tri, seed] = queue.front();
    queue.pop_front();
    if (!seen.insert(std::set<Diagonal>(tri.diagonals().begin(), tri.diagonals().end())).second) continue;
    for (std::size_t k = 0; k < tri.size(); ++k) out.emplace(tri[k], seed.vars[k]);
    for (std::size_t k = 0; k < tri.size(); ++k) queue.emplace_back(polygon_flip(tri, k), mutate_seed(seed, k));
  }
  return out;
}

inline std::vector<Diagonal> all_diagonals(int m) {
  std::vector<Diagonal> out;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 2; b < m; ++b) {
      if (!(a == 0 && b == m - 1)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace fixtures
