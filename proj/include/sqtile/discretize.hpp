#pragma once

// From a compact box union K to a grid set K_n with the same integer
// differences, and from there to a one-cell-per-residue tiling config.

#include <vector>

#include "sqtile/core.hpp"

namespace sqtile {

/// K - K as the union of b - b' over ordered box pairs, duplicates removed,
/// sorted.
BoxUnion minkowski_difference(const BoxUnion& k);

/// Sorted integer points of a box union.
std::vector<LatticeVec> integer_points(const BoxUnion& k);

struct GapResult {
  /// Squared distance from the nearest integer point outside K - K to K - K.
  Rational gap_squared;
  /// Smallest n with n^2 * gap_squared > 32, i.e. n > 4 * sqrt(2) / gap.
  std::int64_t min_resolution = 0;
};

GapResult integer_gap(const BoxUnion& k);

/// Grid cells J = (j1, j2) whose closed square [j1/n, (j1+1)/n] x [j2/n, (j2+1)/n]
/// meets K.
struct CellCover {
  int n = 0;
  std::vector<LatticeVec> cells;  ///< sorted
};

CellCover cover_cells(const BoxUnion& k, int n);

/// The union of the cover's closed cells.
BoxUnion cover_union(const CellCover& cover);

struct DiscretizationComparison {
  std::vector<LatticeVec> original;     ///< (K - K) ∩ Z^2
  std::vector<LatticeVec> discretized;  ///< (K_n - K_n) ∩ Z^2
  bool contains_original = true;        ///< K ⊆ K_n, checked box by box
  [[nodiscard]] bool exact() const { return contains_original && original == discretized; }
};

DiscretizationComparison compare_discretization(const BoxUnion& k, int n);

inline bool check_discretization(const BoxUnion& k, int n) { return compare_discretization(k, n).exact(); }

/// Keeps one covering cell per residue class mod n, choosing the
/// lexicographically smallest translate, and normalizes the result.
TileConfig reduce_to_transversal(const CellCover& cover);

}  // namespace sqtile
