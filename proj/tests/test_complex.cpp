#include <doctest.h>

#include <random>
#include <set>

#include "sqtile/complex.hpp"
#include "sqtile/diffset.hpp"
#include "support.hpp"

using namespace sqtile;

TEST_CASE("vertex labels of the unit square") {
  const VertexLabeling vl = vertex_labels(TileConfig::uniform(1));
  CHECK(vl.at(0, 0) == LatticeVec{0, 0});
  CHECK(vl.at(1, 0) == LatticeVec{-1, 0});
  CHECK(vl.at(0, 1) == LatticeVec{0, -1});
  CHECK(vl.at(1, 1) == LatticeVec{-1, -1});
}

TEST_CASE("vertex labels of the zero config, n=2") {
  const VertexLabeling vl = vertex_labels(TileConfig::uniform(2));
  for (int k = 0; k <= 1; ++k) {
    CHECK(vl.at(2, k) == LatticeVec{-1, 0});
    CHECK(vl.at(k, 2) == LatticeVec{0, -1});
  }
  CHECK(vl.at(2, 2) == LatticeVec{-1, -1});
}

TEST_CASE("vertex labels require a normalized config") {
  CHECK_THROWS_WITH_AS(vertex_labels(TileConfig::uniform(2, {1, 0})), doctest::Contains("config not normalized"),
                       Error);
}

TEST_CASE("edge labels") {
  EdgeLabeling el = edge_labels(TileConfig::uniform(1));
  CHECK(el.hor(0, 0) == LatticeVec{-1, 0});
  CHECK(el.ver(0, 0) == LatticeVec{0, -1});

  el = edge_labels(TileConfig::uniform(2));
  for (int k = 0; k < 2; ++k) {
    CHECK(el.hor(0, k) == LatticeVec{0, 0});
    CHECK(el.hor(1, k) == LatticeVec{-1, 0});
    CHECK(el.ver(k, 0) == LatticeVec{0, 0});
    CHECK(el.ver(k, 1) == LatticeVec{0, -1});
  }
}

TEST_CASE("seam mismatch is detected") {
  VertexLabeling vl = vertex_labels(TileConfig::uniform(2));
  vl.at(2, 1) = {5, 5};
  CHECK_THROWS_WITH_AS(edge_labels(vl), doctest::Contains("seam mismatch"), Error);
}

TEST_CASE("cocycle, gains and membership on random configs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const TileConfig c = testing::random_config(rng, 5, 3, 1);
    const EdgeLabeling el = edge_labels(c);
    const DiffSet d = difference_set(c);
    for (int i = 0; i < c.n; ++i) {
      CHECK(column_gain(el, i) == LatticeVec{0, -1});
      CHECK(row_gain(el, i) == LatticeVec{-1, 0});
      for (int j = 0; j < c.n; ++j) {
        CHECK(cocycle_sum(el, i, j) == LatticeVec{0, 0});
        CHECK(d.contains(el.hor(i, j)));
        CHECK(d.contains(el.ver(i, j)));
      }
    }
  }
}

TEST_CASE("edge coloring") {
  CHECK(classify_value({0, 0}) == Color::white);
  CHECK(classify_value({-3, 0}) == Color::red);
  CHECK(classify_value({0, 2}) == Color::blue);

  auto r = color_edges(edge_labels(TileConfig::uniform(1)));
  REQUIRE(r.coloring);
  CHECK(r.coloring->hor(0, 0) == Color::red);
  CHECK(r.coloring->ver(0, 0) == Color::blue);

  r = color_edges(EdgeLabeling(3));
  REQUIRE(r.coloring);
  for (auto c : r.coloring->h) CHECK(c == Color::white);

  TileConfig c = TileConfig::uniform(2);
  c.at(1, 1) = {1, 1};
  r = color_edges(edge_labels(c));
  CHECK_FALSE(r.coloring);
  REQUIRE_FALSE(r.off_axes.empty());
  for (const auto& e : r.off_axes) CHECK_FALSE(e.value.on_axes());
  std::set<std::pair<EdgeRef, LatticeVec>> got;
  for (const auto& e : r.off_axes) got.insert({e.edge, e.value});
  const std::set<std::pair<EdgeRef, LatticeVec>> expected{{{EdgeKind::h, 0, 1}, {1, 1}},
                                                          {{EdgeKind::h, 1, 1}, {-2, -1}},
                                                          {{EdgeKind::v, 1, 0}, {1, 1}},
                                                          {{EdgeKind::v, 1, 1}, {-1, -2}}};
  CHECK(got == expected);
}

TEST_CASE("square rules") {
  auto sc = square_colors(*color_edges(edge_labels(TileConfig::uniform(1))).coloring);
  REQUIRE(sc.violations.size() == 1);
  CHECK(sc.violations[0].rule == "red and blue");

  EdgeColoring white(3);
  sc = square_colors(white);
  CHECK(sc.valid());
  for (auto s : sc.squares) CHECK(s == Color::white);
}

TEST_CASE("a lone red square forces single-red neighbours") {
  // Bottom and top of square (0,0) are also the top of (0,2) and the bottom
  // of (0,1) on the torus.
  EdgeColoring ec(3);
  ec.hor(0, 0) = Color::red;
  ec.hor(0, 1) = Color::red;
  const auto sc = square_colors(ec);
  CHECK(sc.at(0, 0) == Color::red);
  REQUIRE(sc.violations.size() == 2);
  CHECK(sc.violations[0].square == Cell{0, 1});
  CHECK(sc.violations[0].rule == "single red");
  CHECK(sc.violations[1].square == Cell{0, 2});
  CHECK(sc.violations[1].rule == "single red");
  for (int i = 1; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(sc.at(i, j) == Color::white);
  }
}

TEST_CASE("a closed red band is valid") {
  EdgeColoring band(3);
  for (int j = 0; j < 3; ++j) band.hor(0, j) = Color::red;
  const auto sc = square_colors(band);
  CHECK(sc.valid());
  for (int j = 0; j < 3; ++j) CHECK(sc.at(0, j) == Color::red);
  CHECK(sc.at(1, 0) == Color::white);
}

TEST_CASE("mixed squares are white and reported") {
  EdgeColoring ec(2);
  ec.hor(0, 0) = Color::red;
  ec.ver(0, 0) = Color::blue;
  const auto sc = square_colors(ec);
  CHECK(sc.at(0, 0) == Color::white);
  CHECK(sc.violations.front().square == Cell{0, 0});
  CHECK(sc.violations.front().rule == "red and blue");
}
