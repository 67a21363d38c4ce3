#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sqtile/core.hpp"

namespace sqtile {

/// Subgroup of Z^2 in column Hermite form.
///
/// rank 2: basis {(a, b), (0, c)} with a > 0, c > 0, 0 <= b < c; index = a * c.
/// rank 1: a single generator, (a, b) with a > 0, or (0, c) with c > 0.
/// rank 0: empty basis.
struct LatticeSpan {
  int rank = 0;
  std::vector<LatticeVec> basis;
  std::optional<std::int64_t> index;  ///< empty when the index is infinite

  [[nodiscard]] bool generates_all() const { return rank == 2 && index == 1; }
  friend bool operator==(const LatticeSpan&, const LatticeSpan&) = default;
};

LatticeSpan hermite_span(std::span<const LatticeVec> generators);

std::string to_string(const LatticeSpan& span);

}  // namespace sqtile
