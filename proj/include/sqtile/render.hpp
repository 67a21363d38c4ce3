#pragma once

#include <string>

#include "sqtile/complex.hpp"
#include "sqtile/core.hpp"

namespace sqtile {

struct RenderSpec {
  int cell_px = 48;
  bool edges = true;
  bool colors = true;
  bool components = true;
  bool gains = false;   ///< row/column gains in the margins (configs only)
  bool labels = false;  ///< edge values at edge midpoints (configs only)
};

/// Parses a comma-separated subset of {edges,colors,components,gains,labels}.
RenderSpec parse_show_flags(const std::string& flags, int cell_px);

/// Deterministic SVG of the n x n grid. Seam edges are drawn on both sides of
/// the unit square, so row n repeats row 0 and column n repeats column 0.
std::string render_config(const TileConfig& config, const RenderSpec& spec);
std::string render_coloring(const EdgeColoring& ec, const RenderSpec& spec);

}  // namespace sqtile
