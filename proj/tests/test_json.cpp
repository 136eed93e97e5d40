#include <doctest.h>

#include "fixtures.hpp"

using namespace friezekit;
using namespace fixtures;

TEST_CASE("quiver and seed round trips") {
  for (const auto& q : {a3_quiver(), a12_quiver(), Quiver::from_arrows(2, {{0, 1, 2}})}) {
    CHECK(quiver_from_json(quiver_to_json(q)) == q);
  }
  CHECK(quiver_from_json(Json::parse(R"({"matrix": [[0, 1], [-1, 0]]})")) == a2_quiver());
  const auto s = mutate_along(Seed::base(a3_quiver()), {1, 0});
  const auto back = seed_from_json(seed_to_json(s));
  CHECK(back.path == s.path);
  CHECK(back.vars == s.vars);
  CHECK(back.quiver == s.quiver);
  CHECK(seed_from_json(Json::parse(R"({"n": 2, "arrows": [[0, 1]]})")).path.empty());
}

TEST_CASE("arc, triangulation and polygon round trips") {
  for (const auto& a : {Arc::bridging(1, 2, -3), Arc::peripheral_outer(0, 2), Arc::peripheral_inner(2, 3)}) {
    CHECK(arc_from_json(arc_to_json(a)) == a);
  }
  const auto t = flip(fan_triangulation(MarkedAnnulus(2, 3)), 2).triangulation;
  CHECK(triangulation_from_json(triangulation_to_json(t)) == t);
  CHECK(polygon_from_json(polygon_to_json(a3_hexagon())) == a3_hexagon());
}

TEST_CASE("snake and frieze round trips") {
  const auto g = build_snake_graph({1, 5}, polygon_fan(6));
  CHECK(snake_from_json(snake_to_json(g), 3) == g);
  const auto a = knit_values(a12_quiver(), to_ring(ints({1, 2, 1})), 2, 1);
  CHECK(frieze_from_json(frieze_to_json(a)) == a);
  std::vector<RingElement> g0{RingElement::gaussian(0, 1), RingElement::gaussian(1, 0), RingElement::gaussian(1, 0)};
  const auto ga = knit_frieze(a3_quiver(), g0, 2, 0);
  CHECK(frieze_from_json(frieze_to_json(ga)) == ga);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"arrows": [[0, 1]]})")), FormatError);
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"n": "3", "arrows": []})")), FormatError);
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"n": 2, "arrows": [[0]]})")), FormatError);
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"([1, 2])")), FormatError);
  CHECK_THROWS_AS(arc_from_json(Json::parse(R"({"kind": "spiral", "start": 0, "span": 2})")), FormatError);
  CHECK_THROWS_AS(polygon_from_json(Json::parse(R"({"m": 6})")), FormatError);
  CHECK_THROWS_AS(frieze_from_json(Json::parse(R"({"ring": "Q", "quiver": {"n": 1, "arrows": []},
                                                   "first_column": 0, "columns": [["1"]]})")),
                  std::exception);
}

TEST_CASE("ring lists") {
  CHECK(parse_ring_list("1;2;3", RingKind::Integer) == to_ring(ints({1, 2, 3})));
  CHECK(parse_ring_list("1, 2, 3", RingKind::Integer) == to_ring(ints({1, 2, 3})));
  CHECK(parse_ring_list("1+i;2", RingKind::Gaussian) ==
        std::vector<RingElement>{RingElement::gaussian(1, 1), RingElement::gaussian(2, 0)});
  CHECK_THROWS(parse_ring_list("1;x", RingKind::Integer));
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), FormatError);
}
