#pragma once

// Monochromatic components of a square coloring on the torus, their boundary
// curves, edge-path gains and winding classes, and the image of each
// component's fundamental group in pi_1(torus) = Z^2.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqtile/complex.hpp"
#include "sqtile/core.hpp"
#include "sqtile/diffset.hpp"
#include "sqtile/lattice.hpp"

namespace sqtile {

/// corner: squares touching at a vertex are connected; edge: only squares
/// sharing a side.
enum class Adjacency { corner, edge };

std::string to_string(Adjacency a);

struct Component {
  int n = 0;
  Color color = Color::white;
  Adjacency mode = Adjacency::corner;
  std::vector<Cell> squares;  ///< sorted

  [[nodiscard]] bool contains(Cell c) const;
};

/// Components of an arbitrary square coloring (no edge data needed).
/// Ordered by their smallest square.
std::vector<Component> components(int n, std::span<const Color> squares, Adjacency mode);

/// Components of an edge coloring; throws "coloring invalid" when
/// square_colors reports violations.
std::vector<Component> components(const EdgeColoring& ec, Adjacency mode = Adjacency::corner);

enum class Dir { east, north, west, south };

LatticeVec step(Dir d);

/// A directed torus edge leaving vertex (i, j) in direction `dir`.
struct DirectedEdge {
  int i = 0;
  int j = 0;
  Dir dir = Dir::east;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// A closed edge path on the n-torus.
struct Curve {
  int n = 0;
  std::vector<DirectedEdge> edges;

  [[nodiscard]] bool is_closed() const;
  [[nodiscard]] bool is_simple() const;  ///< no vertex visited twice
};

std::string to_string(const Curve& c);

/// The underlying undirected edge and whether the curve traverses it against
/// its rightward/upward orientation.
std::pair<EdgeRef, bool> undirected(const DirectedEdge& e, int n);

/// Closed path that walks `steps` from vertex (i, j).
Curve make_curve(int n, int i, int j, std::span<const Dir> steps);

/// Boundary of the component as simple closed curves, each oriented with the
/// component on its left. At a vertex where the component touches itself
/// only diagonally the path turns toward the component, which keeps the two
/// sides apart. Any vertex still visited twice splits the loop there.
std::vector<Curve> boundary_curves(const Component& c);

/// Sum of edge values along the curve; backward traversal negates.
LatticeVec curve_gain(const Curve& curve, const EdgeLabeling& el);

/// Winding pair from the net displacement of the lifted path, divided by n.
LatticeVec homotopy_class(const Curve& curve);

/// Subgroup of Z^2 carried by loops inside the component, from deck
/// displacements of non-tree adjacencies of a lifted spanning tree.
LatticeSpan pi1_image(const Component& c);

/// Maximal side-connected pieces of a component.
std::vector<Component> edge_connected_pieces(const Component& c);

enum class AuditStage {
  axes,
  cocycle,
  edge_axes,
  square_rules,
  boundary_white,
  boundary_contractible,
  red_noncontractible,
  pi1_dichotomy,
  contradiction,
};

std::string to_string(AuditStage s);

/// Where the chain of implications for a hypothetical axes-only config first
/// breaks. `failed` is false only when the chain runs to the final
/// contradiction stage.
struct AuditReport {
  AuditStage stage = AuditStage::axes;
  bool failed = true;
  std::string detail;
  std::optional<LatticeVec> witness;
  std::vector<DiffWitness> witness_pairs;
  std::optional<EdgeRef> edge;
  std::optional<Cell> square;
  std::optional<int> component_id;
  std::optional<Curve> curve;
  std::optional<LatticeVec> gain;
  std::optional<LatticeVec> winding;
};

/// Full chain for a normalized config, starting at the difference-set check.
AuditReport audit_config(const TileConfig& config);

/// The chain from the cocycle stage onward, for any labeling.
AuditReport audit_labeling(const EdgeLabeling& el);

}  // namespace sqtile
