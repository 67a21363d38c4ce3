#pragma once

// Shared value types: lattice vectors, grid cells, tiling configurations and
// rational box unions.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqtile {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error raised by operations whose preconditions fail. The message starts
/// with a short stable code ("config not normalized", "budget exceeded", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticeVec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

  constexpr LatticeVec operator+(LatticeVec o) const { return {x + o.x, y + o.y}; }
  constexpr LatticeVec operator-(LatticeVec o) const { return {x - o.x, y - o.y}; }
  constexpr LatticeVec operator-() const { return {-x, -y}; }
  constexpr LatticeVec& operator+=(LatticeVec o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr LatticeVec& operator-=(LatticeVec o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  /// True when the vector lies on Z x {0} or {0} x Z.
  [[nodiscard]] constexpr bool on_axes() const { return x == 0 || y == 0; }
  [[nodiscard]] constexpr bool is_zero() const { return x == 0 && y == 0; }
};

std::string to_string(LatticeVec v);

/// A grid position (i, j) with i the x-index.
struct Cell {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

/// Resolution n plus one integer translate per cell of the n x n grid.
/// Translates are stored row-major by (i, j): index i * n + j.
///
/// The struct does not enforce its shape so that `validate` can report on
/// malformed input; every operation that needs a well-formed config calls
/// `require_valid` first.
struct TileConfig {
  int n = 0;
  std::vector<LatticeVec> translates;

  static TileConfig uniform(int n, LatticeVec u = {});

  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
  }
  [[nodiscard]] LatticeVec at(int i, int j) const { return translates[index(i, j)]; }
  LatticeVec& at(int i, int j) { return translates[index(i, j)]; }
  [[nodiscard]] int cell_count() const { return n * n; }

  friend auto operator<=>(const TileConfig&, const TileConfig&) = default;
};

struct Violation {
  std::string code;  ///< "non-positive n" or "wrong cell count"
  std::string detail;
};

std::vector<Violation> validate(const TileConfig& config);
void require_valid(const TileConfig& config);

/// Shifts every translate by -u_{0,0}.
TileConfig normalize(const TileConfig& config);
TileConfig translated(const TileConfig& config, LatticeVec shift);
bool is_normalized(const TileConfig& config);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// Closed axis-aligned box [x0, x1] x [y0, y1]. Degenerate boxes (segments,
/// points) are allowed.
struct Box {
  Rational x0, y0, x1, y1;

  friend bool operator==(const Box&, const Box&) = default;
  friend bool operator<(const Box& a, const Box& b);
};

/// A compact set given as a finite union of closed rational boxes.
struct BoxUnion {
  std::vector<Box> boxes;
  friend bool operator==(const BoxUnion&, const BoxUnion&) = default;
};

void require_valid(const BoxUnion& k);

}  // namespace sqtile
