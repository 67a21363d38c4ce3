#include <doctest.h>

#include <random>

#include "sqtile/io.hpp"
#include "sqtile/render.hpp"
#include "support.hpp"

using namespace sqtile;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++k;
  return k;
}

}  // namespace

TEST_CASE("config round trip") {
  const std::string text = "n 2\nu 0 0 0 0\nu 0 1 1 -1\nu 1 0 0 3\nu 1 1 -2 0\n";
  const TileConfig c = parse_config(text);
  CHECK(c.at(0, 1) == LatticeVec{1, -1});
  CHECK(emit_config(c) == text);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const TileConfig r = testing::random_config(rng, 5, 4, 1);
    CHECK(parse_config(emit_config(r)) == r);
  }
}

TEST_CASE("config parse accepts comments and any line order") {
  const TileConfig c = parse_config("# header\nn 2\n\nu 1 1 0 0\nu 0 0 0 0 # base\nu 1 0 0 0\nu 0 1 0 0\n");
  CHECK(c == TileConfig::uniform(2));
}

TEST_CASE("config parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_config("n 1\nu 0 0 x 0\n"), "line 2: expected integer, got 'x'", ParseError);
  try {
    parse_config("n 2\nu 0 0 0 0\nu 0 0 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_config("n 2\nu 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_config("n 2\nu 2 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_config("u 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_config(""), ParseError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("boxes round trip") {
  const std::string text = "box 0 0 1/2 1\nbox 3/2 -1 2 7/3\n";
  const BoxUnion k = parse_boxes(text);
  CHECK(k.boxes.size() == 2);
  CHECK(emit_boxes(k) == text);
  CHECK_THROWS_WITH_AS(parse_boxes("box 0 0 1 1\nbox 1 0 0 1\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_boxes("box 0 0 1/0 1\n"), doctest::Contains("line 1"), ParseError);
}

TEST_CASE("coloring round trip") {
  EdgeColoring ec(2);
  ec.hor(1, 0) = Color::red;
  ec.ver(0, 1) = Color::blue;
  const std::string text = emit_coloring(ec);
  CHECK(parse_coloring(text) == ec);
  CHECK(emit_coloring(parse_coloring(text)) == text);
  CHECK_THROWS_AS(parse_coloring("n 1\nh 0 0 green\nv 0 0 red\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("n 1\nh 0 0 red\n"), ParseError);
}

TEST_CASE("format sniffing") {
  CHECK(looks_like_config("n 1\nu 0 0 0 0\n"));
  CHECK_FALSE(looks_like_config("n 1\nh 0 0 red\nv 0 0 blue\n"));
}

TEST_CASE("render the n=1 config") {
  const std::string svg = render_config(TileConfig::uniform(1), RenderSpec{});
  CHECK(count(svg, "class=\"square\"") == 1);
  CHECK(count(svg, "stroke=\"#ff4040\"") == 2);
  CHECK(count(svg, "stroke=\"#40a0ff\"") == 2);
  CHECK(render_config(TileConfig::uniform(1), RenderSpec{}) == svg);
}

TEST_CASE("render an all-white coloring") {
  const std::string svg = render_coloring(EdgeColoring(3), RenderSpec{});
  CHECK(count(svg, "class=\"edge\"") == 24);
  CHECK(count(svg, "stroke=\"#ffffff\"") == 24);
  CHECK(count(svg, "stroke=\"#ff4040\"") == 0);
  CHECK(count(svg, "stroke=\"#40a0ff\"") == 0);
}

TEST_CASE("render options") {
  RenderSpec spec;
  spec.cell_px = 3;
  CHECK_THROWS_WITH_AS(render_coloring(EdgeColoring(2), spec), "cell_px too small", Error);
  CHECK_THROWS_WITH_AS(render_config(TileConfig::uniform(2), spec), "cell_px too small", Error);

  const RenderSpec labels = parse_show_flags("edges,labels,gains", 32);
  CHECK_FALSE(labels.colors);
  const std::string svg = render_config(TileConfig::uniform(2), labels);
  CHECK(count(svg, "class=\"square\"") == 0);
  CHECK(count(svg, "<text") == 12 + 4);
  CHECK_THROWS_AS(parse_show_flags("edges,bogus", 32), Error);
}
