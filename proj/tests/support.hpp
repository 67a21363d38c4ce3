#pragma once

#include <random>

#include "sqtile/core.hpp"

namespace sqtile::testing {

inline TileConfig random_config(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  TileConfig c = TileConfig::uniform(n);
  for (auto& u : c.translates) u = {coord(rng), coord(rng)};
  c.translates[0] = {};
  return c;
}

inline TileConfig random_config(std::mt19937_64& rng, int max_n, int max_bound, int min_n) {
  std::uniform_int_distribution<int> nd(min_n, max_n);
  std::uniform_int_distribution<int> bd(0, max_bound);
  const int n = nd(rng);
  return random_config(rng, n, bd(rng));
}

}  // namespace sqtile::testing
