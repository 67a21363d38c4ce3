#include <doctest.h>

#include <random>

#include "sqtile/complex.hpp"
#include "sqtile/topology.hpp"
#include "support.hpp"

using namespace sqtile;

namespace {

std::vector<Color> paint(int n, std::initializer_list<Cell> cells, Color c = Color::red) {
  std::vector<Color> squares(static_cast<std::size_t>(n * n), Color::white);
  for (auto cell : cells) squares[static_cast<std::size_t>(cell.i * n + cell.j)] = c;
  return squares;
}

Component colored_component(int n, std::initializer_list<Cell> cells, Adjacency mode = Adjacency::corner) {
  for (auto& comp : components(n, paint(n, cells), mode)) {
    if (comp.color == Color::red) return comp;
  }
  throw std::logic_error("no red component");
}

Curve row_loop(int n, int j) {
  std::vector<Dir> steps(static_cast<std::size_t>(n), Dir::east);
  return make_curve(n, 0, j, steps);
}

Curve column_loop(int n, int i) {
  std::vector<Dir> steps(static_cast<std::size_t>(n), Dir::north);
  return make_curve(n, i, 0, steps);
}

Curve square_loop(int n, int i, int j) {
  const std::vector<Dir> steps{Dir::east, Dir::north, Dir::west, Dir::south};
  return make_curve(n, i, j, steps);
}

// Random walk closed up so that it winds (a, b) times.
Curve random_closed_curve(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dir(0, 3);
  std::uniform_int_distribution<int> wind(-1, 1);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> pos(0, n - 1);
  std::vector<Dir> steps;
  LatticeVec at{};
  for (int k = len(rng); k > 0; --k) {
    const Dir d = static_cast<Dir>(dir(rng));
    steps.push_back(d);
    at += step(d);
  }
  const LatticeVec target{wind(rng) * n, wind(rng) * n};
  while (at.x != target.x) {
    const Dir d = at.x < target.x ? Dir::east : Dir::west;
    steps.push_back(d);
    at += step(d);
  }
  while (at.y != target.y) {
    const Dir d = at.y < target.y ? Dir::north : Dir::south;
    steps.push_back(d);
    at += step(d);
  }
  if (steps.empty()) {
    steps = {Dir::east, Dir::west};
  }
  return make_curve(n, pos(rng), pos(rng), steps);
}

}  // namespace

TEST_CASE("components in corner and edge mode") {
  auto comps = components(3, paint(3, {{0, 0}}), Adjacency::corner);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].color == Color::red);
  CHECK(comps[0].squares == std::vector<Cell>{{0, 0}});
  CHECK(comps[1].color == Color::white);
  CHECK(comps[1].squares.size() == 8);

  comps = components(3, paint(3, {{0, 0}, {1, 1}}), Adjacency::corner);
  CHECK(std::count_if(comps.begin(), comps.end(), [](const Component& c) { return c.color == Color::red; }) == 1);
  comps = components(3, paint(3, {{0, 0}, {1, 1}}), Adjacency::edge);
  CHECK(std::count_if(comps.begin(), comps.end(), [](const Component& c) { return c.color == Color::red; }) == 2);
}

TEST_CASE("components wrap around the torus") {
  auto comps = components(4, paint(4, {{0, 1}, {3, 1}}), Adjacency::edge);
  CHECK(comps.size() == 2);
  comps = components(4, paint(4, {{0, 0}, {3, 3}}), Adjacency::corner);
  CHECK(comps.size() == 2);
  comps = components(4, paint(4, {{0, 0}, {3, 3}}), Adjacency::edge);
  CHECK(comps.size() == 3);
}

TEST_CASE("components of an edge coloring reject invalid colorings") {
  EdgeColoring ec(2);
  ec.hor(0, 0) = Color::red;
  CHECK_THROWS_WITH_AS(components(ec), doctest::Contains("coloring invalid"), Error);
  CHECK(components(EdgeColoring(2)).size() == 1);
}

TEST_CASE("boundary of a single square") {
  const auto curves = boundary_curves(colored_component(3, {{1, 1}}));
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].edges.size() == 4);
  CHECK(curves[0].is_closed());
  CHECK(curves[0].is_simple());
  CHECK(homotopy_class(curves[0]) == LatticeVec{0, 0});
}

TEST_CASE("full torus has no boundary") {
  const auto comps = components(3, paint(3, {}), Adjacency::corner);
  REQUIRE(comps.size() == 1);
  CHECK(boundary_curves(comps[0]).empty());
  CHECK(pi1_image(comps[0]).generates_all());
}

TEST_CASE("horizontal band") {
  const Component band = colored_component(4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  const auto curves = boundary_curves(band);
  REQUIRE(curves.size() == 2);
  for (const auto& c : curves) {
    CHECK(c.edges.size() == 4);
    CHECK(c.is_simple());
  }
  std::vector<LatticeVec> classes{homotopy_class(curves[0]), homotopy_class(curves[1])};
  std::sort(classes.begin(), classes.end());
  CHECK(classes == std::vector<LatticeVec>{{-1, 0}, {1, 0}});

  const auto span = pi1_image(band);
  CHECK(span.rank == 1);
  CHECK(span.basis == std::vector<LatticeVec>{{1, 0}});
}

TEST_CASE("boundary edges lie between the component and its complement") {
  std::mt19937_64 rng(23);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<Color> squares(static_cast<std::size_t>(n * n));
    for (auto& s : squares) s = coin(rng) ? Color::red : Color::white;
    for (const auto& comp : components(n, squares, Adjacency::corner)) {
      std::size_t total = 0;
      for (const auto& curve : boundary_curves(comp)) {
        CHECK(curve.is_closed());
        CHECK(curve.is_simple());
        total += curve.edges.size();
      }
      std::size_t expected = 0;
      for (auto sq : comp.squares) {
        expected += !comp.contains({sq.i, wrap(sq.j - 1, n)});
        expected += !comp.contains({sq.i, wrap(sq.j + 1, n)});
        expected += !comp.contains({wrap(sq.i - 1, n), sq.j});
        expected += !comp.contains({wrap(sq.i + 1, n), sq.j});
      }
      CHECK(total == expected);
    }
  }
}

TEST_CASE("gains of basic loops") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const TileConfig c = testing::random_config(rng, 5, 3, 1);
    const EdgeLabeling el = edge_labels(c);
    CHECK(curve_gain(row_loop(c.n, 0), el) == LatticeVec{-1, 0});
    CHECK(curve_gain(column_loop(c.n, 0), el) == LatticeVec{0, -1});
    CHECK(curve_gain(square_loop(c.n, 0, 0), el) == LatticeVec{0, 0});
    CHECK(curve_gain(square_loop(c.n, c.n - 1, c.n - 1), el) == LatticeVec{0, 0});
  }
}

TEST_CASE("homotopy classes") {
  CHECK(homotopy_class(square_loop(3, 0, 0)) == LatticeVec{0, 0});
  CHECK(homotopy_class(row_loop(3, 0)) == LatticeVec{1, 0});
  CHECK(homotopy_class(column_loop(3, 2)) == LatticeVec{0, 1});
  std::vector<Dir> stairs;
  for (int k = 0; k < 4; ++k) {
    stairs.push_back(Dir::east);
    stairs.push_back(Dir::north);
  }
  CHECK(homotopy_class(make_curve(4, 0, 0, stairs)) == LatticeVec{1, 1});
}

TEST_CASE("homotopy class is minus the gain") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const TileConfig c = testing::random_config(rng, 5, 3, 1);
    const EdgeLabeling el = edge_labels(c);
    for (int k = 0; k < 50; ++k) {
      const Curve curve = random_closed_curve(rng, c.n);
      CHECK(homotopy_class(curve) == -curve_gain(curve, el));
    }
  }
}

TEST_CASE("unclosed paths are rejected") {
  const std::vector<Dir> steps{Dir::east, Dir::north};
  CHECK_THROWS_WITH_AS(make_curve(3, 0, 0, steps), doctest::Contains("curve not closed"), Error);
}

TEST_CASE("gains avoiding blue edges have no vertical part") {
  // Any labeling whose edge colors are red/white on the curve's edges.
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> value(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    EdgeLabeling el(n);
    for (auto& v : el.h) v = {value(rng), 0};
    for (auto& v : el.v) v = {0, value(rng)};
    const Curve curve = row_loop(n, trial % n);
    CHECK(curve_gain(curve, el).y == 0);
  }
}

TEST_CASE("pi1 image") {
  CHECK(pi1_image(colored_component(3, {{0, 0}})).rank == 0);
  CHECK(pi1_image(colored_component(3, {{0, 0}, {1, 0}, {1, 1}})).rank == 0);

  const auto comps = components(2, paint(2, {}), Adjacency::corner);
  CHECK(pi1_image(comps[0]).generates_all());

  const auto column = pi1_image(colored_component(3, {{1, 0}, {1, 1}, {1, 2}}));
  CHECK(column.rank == 1);
  CHECK(column.basis == std::vector<LatticeVec>{{0, 1}});
}

TEST_CASE("edge-connected pieces") {
  auto pieces = edge_connected_pieces(colored_component(3, {{0, 0}, {1, 1}}));
  CHECK(pieces.size() == 2);

  const Component blob = colored_component(5, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  pieces = edge_connected_pieces(blob);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].squares == blob.squares);

  pieces = edge_connected_pieces(colored_component(5, {{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}}));
  CHECK(pieces.size() == 1);
}

TEST_CASE("diagonal band: contractible boundary but rank-one image") {
  // Corner adjacency joins the three diagonal squares into one loop around
  // the (1,1) direction, while each boundary curve bounds a single square.
  const Component diag = colored_component(3, {{0, 0}, {1, 1}, {2, 2}});
  const auto curves = boundary_curves(diag);
  CHECK(curves.size() == 3);
  for (const auto& c : curves) CHECK(homotopy_class(c) == LatticeVec{0, 0});
  const auto span = pi1_image(diag);
  CHECK(span.rank == 1);
  CHECK(span.basis == std::vector<LatticeVec>{{1, 1}});

  // In edge mode the same squares are three contractible pieces.
  for (const auto& piece : edge_connected_pieces(diag)) CHECK(pi1_image(piece).rank == 0);
}

TEST_CASE("audit of real configs stops at the axes check") {
  auto r = audit_config(TileConfig::uniform(1));
  CHECK(r.stage == AuditStage::axes);
  CHECK(r.failed);
  CHECK(r.witness == LatticeVec{-1, -1});

  r = audit_config(TileConfig::uniform(2));
  CHECK(r.stage == AuditStage::axes);

  TileConfig c = TileConfig::uniform(2);
  c.at(1, 0) = {0, 3};
  c.at(0, 1) = {5, 0};
  r = audit_config(c);
  CHECK(r.stage == AuditStage::axes);
  REQUIRE(r.witness);
  CHECK_FALSE(r.witness->on_axes());
  CHECK_FALSE(r.witness_pairs.empty());

  CHECK_THROWS_WITH_AS(audit_config(TileConfig::uniform(2, {1, 1})), doctest::Contains("config not normalized"),
                       Error);
}

TEST_CASE("audit of synthetic labelings") {
  // No cocycle class.
  auto r = audit_labeling(EdgeLabeling(2));
  CHECK(r.stage == AuditStage::cocycle);
  CHECK(r.gain == LatticeVec{0, 0});

  EdgeLabeling broken = edge_labels(TileConfig::uniform(2));
  broken.hor(0, 0) = {3, 0};
  r = audit_labeling(broken);
  CHECK(r.stage == AuditStage::cocycle);
  CHECK(r.square.has_value());

  TileConfig off = TileConfig::uniform(2);
  off.at(1, 1) = {1, 1};
  r = audit_labeling(edge_labels(off));
  CHECK(r.stage == AuditStage::edge_axes);
  REQUIRE(r.witness);
  CHECK_FALSE(r.witness->on_axes());

  r = audit_labeling(edge_labels(TileConfig::uniform(2)));
  CHECK(r.stage == AuditStage::square_rules);
  CHECK(r.detail == "red and blue");
  CHECK(r.square == Cell{1, 1});
}
