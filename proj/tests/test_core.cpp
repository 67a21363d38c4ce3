#include <doctest.h>

#include <random>

#include "sqtile/core.hpp"
#include "sqtile/lattice.hpp"
#include "support.hpp"

using namespace sqtile;

TEST_CASE("normalize subtracts the base translate") {
  TileConfig c{1, {{5, -3}}};
  CHECK(normalize(c) == TileConfig{1, {{0, 0}}});

  const TileConfig ones = TileConfig::uniform(2, {1, 1});
  CHECK(normalize(ones) == TileConfig::uniform(2));

  TileConfig mixed{2, {{0, 0}, {1, -2}, {3, 0}, {-1, -1}}};
  CHECK(normalize(mixed) == mixed);
  CHECK(is_normalized(mixed));
  CHECK_FALSE(is_normalized(ones));
}

TEST_CASE("normalize is idempotent and translation invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    TileConfig c = testing::random_config(rng, 4, 3, 1);
    c = translated(c, {trial % 5 - 2, trial % 3});
    const TileConfig once = normalize(c);
    CHECK(normalize(once) == once);
    CHECK(normalize(translated(c, {11, -4})) == once);
  }
}

TEST_CASE("validate reports shape problems") {
  CHECK(validate(TileConfig::uniform(2)).empty());

  TileConfig short_one{2, {{0, 0}, {0, 0}, {0, 0}}};
  auto v = validate(short_one);
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == "wrong cell count");
  CHECK_THROWS_AS(require_valid(short_one), Error);

  TileConfig zero{0, {}};
  v = validate(zero);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].code == "non-positive n");
}

TEST_CASE("floor and ceil of rationals") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(4)) == 4);
  CHECK(ceil(Rational(-4)) == -4);
}

TEST_CASE("hermite span of small generator sets") {
  std::vector<LatticeVec> cross{{-1, 0}, {0, -1}, {0, 0}, {1, 0}, {0, 1}};
  auto s = hermite_span(cross);
  CHECK(s.rank == 2);
  CHECK(s.index == 1);
  CHECK(s.generates_all());

  std::vector<LatticeVec> even{{2, 0}, {0, 2}};
  s = hermite_span(even);
  CHECK(s.rank == 2);
  CHECK(s.index == 4);

  std::vector<LatticeVec> skew{{2, 1}, {1, 1}};
  s = hermite_span(skew);
  CHECK(s.generates_all());
  CHECK(s.basis == std::vector<LatticeVec>{{1, 0}, {0, 1}});

  std::vector<LatticeVec> line{{2, 4}, {-3, -6}};
  s = hermite_span(line);
  CHECK(s.rank == 1);
  CHECK(s.basis == std::vector<LatticeVec>{{1, 2}});
  CHECK_FALSE(s.index.has_value());

  std::vector<LatticeVec> vertical{{0, -3}, {0, 6}};
  s = hermite_span(vertical);
  CHECK(s.rank == 1);
  CHECK(s.basis == std::vector<LatticeVec>{{0, 3}});

  std::vector<LatticeVec> zero{{0, 0}};
  CHECK(hermite_span(zero).rank == 0);
  CHECK(hermite_span({}).rank == 0);
}

TEST_CASE("hermite span is canonical") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<LatticeVec> gens;
    for (int k = 0; k < 4; ++k) gens.push_back({coord(rng), coord(rng)});
    const auto s = hermite_span(gens);
    // The basis spans the same group: re-reducing the basis alone, or the
    // generators plus combinations, gives the same canonical form.
    CHECK(hermite_span(s.basis) == s);
    auto more = gens;
    more.push_back(gens[0] + gens[1]);
    more.push_back(gens[2] - gens[3]);
    CHECK(hermite_span(more) == s);
    if (s.rank == 2) {
      CHECK(s.basis[0].x > 0);
      CHECK(s.basis[1].x == 0);
      CHECK(s.basis[1].y > 0);
      CHECK(s.basis[0].y >= 0);
      CHECK(s.basis[0].y < s.basis[1].y);
      CHECK(*s.index == s.basis[0].x * s.basis[1].y);
    }
  }
}
