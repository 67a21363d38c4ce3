#pragma once

// Bounded exhaustive search over tiling configurations for one whose integer
// difference set stays on the coordinate axes.
//
// The space at (n, bound): u_{0,0} = (0,0) and every other translate in
// [-bound, bound]^2. A report of zero valid configurations covers exactly this
// space and says nothing about larger translates.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sqtile/core.hpp"

namespace sqtile {

enum class Engine { plain, pruned };

std::string to_string(Engine e);

struct SearchSpec {
  int n = 1;
  int bound = 0;
  Engine engine = Engine::pruned;
  /// Skip leaves whose transpose is lexicographically smaller.
  bool symmetry = false;
  /// plain: maximum configs; pruned: maximum placements.
  std::uint64_t budget = 50'000'000;
  unsigned jobs = 1;
  bool retain_witnesses = false;
};

/// A config and an off-axes vector of its difference set. For the pruned
/// engine the config is the pruned prefix completed with zero translates.
struct WitnessRecord {
  TileConfig config;
  LatticeVec witness;
};

struct SearchReport {
  SearchSpec spec;
  /// Every config in the space, counted once: evaluated leaves plus the
  /// sizes of pruned subtrees.
  BigInt configs_enumerated;
  std::uint64_t nodes_visited = 0;
  std::uint64_t leaves_reached = 0;
  std::uint64_t symmetry_skipped = 0;
  std::uint64_t valid_found = 0;
  /// Off-axes witness vector -> number of configs it rules out.
  std::map<LatticeVec, BigInt> witness_histogram;
  std::vector<TileConfig> valid_configs;
  std::vector<WitnessRecord> witnesses;
  double wall_seconds = 0.0;
};

/// (2*bound+1)^(2*(n^2-1)).
BigInt search_space_size(int n, int bound);

SearchReport search_plain(const SearchSpec& spec);
SearchReport search_pruned(const SearchSpec& spec);
SearchReport run_search(const SearchSpec& spec);

/// Replays each retained witness through the geometric difference set.
/// Throws "stale witness" when a witness is missing or on an axis.
bool verify_witnesses(const SearchReport& report);

// Symmetries of the problem. Each maps K_n to an isometric image (possibly
// translated by a non-integer vector), so difference sets map by the same
// linear part and the axes property is preserved.
TileConfig transpose(const TileConfig& c);       ///< (x, y) -> (y, x)
TileConfig antitranspose(const TileConfig& c);   ///< (x, y) -> (-y, -x)
TileConfig reflect_x(const TileConfig& c);       ///< (x, y) -> (-x, y)
TileConfig reflect_y(const TileConfig& c);       ///< (x, y) -> (x, -y)

}  // namespace sqtile
