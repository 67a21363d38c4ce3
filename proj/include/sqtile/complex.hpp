#pragma once

// The n x n square complex on the torus: vertex labels built from a config,
// the Z^2-valued edge cocycle, and the red/blue/white edge coloring.
//
// Edge indexing (all indices mod n):
//   h(i, j): horizontal edge from vertex (i, j) to (i+1, j)
//   v(i, j): vertical edge from vertex (i, j) to (i, j+1)
// Square (i, j) has bottom h(i, j), top h(i, j+1), left v(i, j), right v(i+1, j).

#include <optional>
#include <string>
#include <vector>

#include "sqtile/core.hpp"

namespace sqtile {

inline int wrap(int k, int n) {
  const int r = k % n;
  return r < 0 ? r + n : r;
}

/// Labels v_{i,j} on the (n+1) x (n+1) vertices of the subdivided unit square.
struct VertexLabeling {
  int n = 0;
  std::vector<LatticeVec> labels;  ///< row-major by (i, j), (n+1)^2 entries

  [[nodiscard]] LatticeVec at(int i, int j) const {
    return labels[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(j)];
  }
  LatticeVec& at(int i, int j) {
    return labels[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(j)];
  }
};

enum class EdgeKind { h, v };

struct EdgeRef {
  EdgeKind kind = EdgeKind::h;
  int i = 0;
  int j = 0;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string to_string(EdgeRef e);

/// Per-edge data on the torus, stored as two n x n arrays.
template <typename T>
struct EdgeField {
  int n = 0;
  std::vector<T> h;
  std::vector<T> v;

  EdgeField() = default;
  explicit EdgeField(int n_, T init = T{})
      : n(n_),
        h(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), init),
        v(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), init) {}

  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(wrap(i, n)) * static_cast<std::size_t>(n) + static_cast<std::size_t>(wrap(j, n));
  }
  [[nodiscard]] const T& hor(int i, int j) const { return h[index(i, j)]; }
  [[nodiscard]] const T& ver(int i, int j) const { return v[index(i, j)]; }
  T& hor(int i, int j) { return h[index(i, j)]; }
  T& ver(int i, int j) { return v[index(i, j)]; }
  [[nodiscard]] const T& at(EdgeRef e) const { return e.kind == EdgeKind::h ? hor(e.i, e.j) : ver(e.i, e.j); }
  T& at(EdgeRef e) { return e.kind == EdgeKind::h ? hor(e.i, e.j) : ver(e.i, e.j); }

  friend bool operator==(const EdgeField&, const EdgeField&) = default;
};

/// The cocycle: value of each directed edge (rightward / upward).
using EdgeLabeling = EdgeField<LatticeVec>;

enum class Color { white, red, blue };

std::string to_string(Color c);
std::optional<Color> parse_color(const std::string& s);

using EdgeColoring = EdgeField<Color>;

/// Requires a normalized config (u_{0,0} = (0,0)); throws "config not normalized".
VertexLabeling vertex_labels(const TileConfig& config);

/// h(i,j) = v_{i+1,j} - v_{i,j}, v(i,j) = v_{i,j+1} - v_{i,j}, folded onto the
/// torus after checking that row n repeats row 0 and column n repeats column 0.
/// Throws "seam mismatch" otherwise.
EdgeLabeling edge_labels(const VertexLabeling& vl);

inline EdgeLabeling edge_labels(const TileConfig& config) { return edge_labels(vertex_labels(config)); }

/// Signed sum h(i,j) + v(i+1,j) - h(i,j+1) - v(i,j) around square (i, j).
LatticeVec cocycle_sum(const EdgeLabeling& el, int i, int j);

/// Sum of h along row j, and of v along column i.
LatticeVec row_gain(const EdgeLabeling& el, int j);
LatticeVec column_gain(const EdgeLabeling& el, int i);

struct OffAxesEdge {
  EdgeRef edge;
  LatticeVec value;
};

struct ColoringResult {
  std::optional<EdgeColoring> coloring;  ///< set iff every value is on an axis
  std::vector<OffAxesEdge> off_axes;
};

Color classify_value(LatticeVec v);
ColoringResult color_edges(const EdgeLabeling& el);

struct SquareViolation {
  Cell square;
  std::string rule;  ///< "red and blue", "single red", "single blue"
};

struct SquareClassification {
  int n = 0;
  std::vector<Color> squares;  ///< row-major by (i, j)
  std::vector<SquareViolation> violations;

  [[nodiscard]] Color at(int i, int j) const {
    return squares[static_cast<std::size_t>(wrap(i, n)) * static_cast<std::size_t>(n) + static_cast<std::size_t>(wrap(j, n))];
  }
  [[nodiscard]] bool valid() const { return violations.empty(); }
};

SquareClassification square_colors(const EdgeColoring& ec);

}  // namespace sqtile
