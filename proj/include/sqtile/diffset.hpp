#pragma once

// Integer points of K_n - K_n for a tiling configuration, the coordinate-axes
// predicate, and the subgroup of Z^2 spanned by a difference set.

#include <map>
#include <optional>
#include <vector>

#include "sqtile/core.hpp"
#include "sqtile/lattice.hpp"

namespace sqtile {

/// Cell pair (p, q) and shift m such that (u_p - u_q) + m is the witnessed
/// integer difference.
struct DiffWitness {
  Cell p;
  Cell q;
  LatticeVec m;
  friend auto operator<=>(const DiffWitness&, const DiffWitness&) = default;
};

/// A finite set of lattice vectors, kept sorted lexicographically, with
/// optional per-vector provenance.
class DiffSet {
 public:
  DiffSet() = default;
  explicit DiffSet(std::vector<LatticeVec> vectors);

  [[nodiscard]] const std::vector<LatticeVec>& vectors() const { return vectors_; }
  [[nodiscard]] std::size_t size() const { return vectors_.size(); }
  [[nodiscard]] bool contains(LatticeVec v) const;
  [[nodiscard]] bool is_symmetric() const;

  [[nodiscard]] bool has_provenance() const { return !provenance_.empty(); }
  /// Witness pairs for v; empty when provenance was not retained.
  [[nodiscard]] std::vector<DiffWitness> witnesses(LatticeVec v) const;
  void set_provenance(std::map<LatticeVec, std::vector<DiffWitness>> provenance);

  friend bool operator==(const DiffSet& a, const DiffSet& b) { return a.vectors_ == b.vectors_; }

 private:
  std::vector<LatticeVec> vectors_;
  std::map<LatticeVec, std::vector<DiffWitness>> provenance_;
};

/// Shifts m in {-1, 0, 1} for which the integer m*n is within 1 of `delta`.
/// An integer point d + m lies in (B_p + u_p) - (B_q + u_q) exactly when
/// each coordinate of m satisfies this for the matching index offset.
std::vector<int> admissible_shifts(int n, int delta);

/// Exact (K_n - K_n) ∩ Z^2 via the cell-offset rule.
DiffSet difference_set(const TileConfig& config, bool with_provenance = false);

/// Independent route: builds every closed rational difference box and lists
/// its integer points.
DiffSet geometric_difference_set(const TileConfig& config);

struct AxesVerdict {
  bool on_axes = true;
  std::optional<LatticeVec> witness;  ///< lexicographically smallest off-axes vector
  std::vector<DiffWitness> witness_pairs;
};

AxesVerdict axes_subset(const DiffSet& d);

inline LatticeSpan lattice_span(const DiffSet& d) { return hermite_span(d.vectors()); }

}  // namespace sqtile
