#include "sqtile/discretize.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace sqtile {

namespace {

std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v); }

Rational squared_distance(LatticeVec z, const Box& b) {
  const Rational zx(z.x), zy(z.y);
  Rational dx = 0, dy = 0;
  if (zx < b.x0) dx = b.x0 - zx;
  else if (zx > b.x1) dx = zx - b.x1;
  if (zy < b.y0) dy = b.y0 - zy;
  else if (zy > b.y1) dy = zy - b.y1;
  return dx * dx + dy * dy;
}

Box bounding_box(const BoxUnion& k) {
  Box bb = k.boxes.front();
  for (const auto& b : k.boxes) {
    bb.x0 = std::min(bb.x0, b.x0);
    bb.y0 = std::min(bb.y0, b.y0);
    bb.x1 = std::max(bb.x1, b.x1);
    bb.y1 = std::max(bb.y1, b.y1);
  }
  return bb;
}

bool closed_intersect(const Box& a, const Box& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

Box cell_box(LatticeVec cell, int n) {
  return {Rational(cell.x, n), Rational(cell.y, n), Rational(cell.x + 1, n), Rational(cell.y + 1, n)};
}

}  // namespace

BoxUnion minkowski_difference(const BoxUnion& k) {
  require_valid(k);
  std::set<Box> boxes;
  for (const auto& a : k.boxes) {
    for (const auto& b : k.boxes) boxes.insert({a.x0 - b.x1, a.y0 - b.y1, a.x1 - b.x0, a.y1 - b.y0});
  }
  return {std::vector<Box>(boxes.begin(), boxes.end())};
}

std::vector<LatticeVec> integer_points(const BoxUnion& k) {
  std::set<LatticeVec> pts;
  for (const auto& b : k.boxes) {
    const auto xs = to_i64(ceil(b.x0)), xe = to_i64(floor(b.x1));
    const auto ys = to_i64(ceil(b.y0)), ye = to_i64(floor(b.y1));
    for (auto x = xs; x <= xe; ++x) {
      for (auto y = ys; y <= ye; ++y) pts.insert({x, y});
    }
  }
  return {pts.begin(), pts.end()};
}

GapResult integer_gap(const BoxUnion& k) {
  const BoxUnion diff = minkowski_difference(k);
  const std::vector<LatticeVec> inside = integer_points(diff);
  const Box bb = bounding_box(diff);

  // Let X0 be the left edge of the bounding box and p a point of K - K on it.
  // The integer point (ceil(X0) - 1, round(p.y)) is outside the box and within
  // sqrt(5)/2 < 2 of p, so integer points farther than 2 from the bounding box
  // never realize the minimum.
  const auto x_lo = to_i64(floor(bb.x0)) - 2, x_hi = to_i64(ceil(bb.x1)) + 2;
  const auto y_lo = to_i64(floor(bb.y0)) - 2, y_hi = to_i64(ceil(bb.y1)) + 2;

  std::optional<Rational> best;
  for (auto x = x_lo; x <= x_hi; ++x) {
    for (auto y = y_lo; y <= y_hi; ++y) {
      const LatticeVec z{x, y};
      if (std::binary_search(inside.begin(), inside.end(), z)) continue;
      for (const auto& b : diff.boxes) {
        Rational d = squared_distance(z, b);
        if (!best || d < *best) best = std::move(d);
      }
    }
  }

  GapResult out;
  out.gap_squared = *best;
  const Rational bound = Rational(32) / out.gap_squared;
  BigInt n = boost::multiprecision::sqrt(floor(bound));
  while (Rational(n * n) <= bound) ++n;
  out.min_resolution = to_i64(n);
  return out;
}

CellCover cover_cells(const BoxUnion& k, int n) {
  require_valid(k);
  if (n < 1) throw Error("non-positive n");
  const Box bb = bounding_box(k);
  const auto j1_lo = to_i64(ceil(bb.x0 * n)) - 1, j1_hi = to_i64(floor(bb.x1 * n));
  const auto j2_lo = to_i64(ceil(bb.y0 * n)) - 1, j2_hi = to_i64(floor(bb.y1 * n));

  CellCover cover;
  cover.n = n;
  for (auto j1 = j1_lo; j1 <= j1_hi; ++j1) {
    for (auto j2 = j2_lo; j2 <= j2_hi; ++j2) {
      const Box cell = cell_box({j1, j2}, n);
      if (std::any_of(k.boxes.begin(), k.boxes.end(), [&](const Box& b) { return closed_intersect(cell, b); })) {
        cover.cells.push_back({j1, j2});
      }
    }
  }
  return cover;
}

BoxUnion cover_union(const CellCover& cover) {
  BoxUnion out;
  for (const auto c : cover.cells) out.boxes.push_back(cell_box(c, cover.n));
  return out;
}

DiscretizationComparison compare_discretization(const BoxUnion& k, int n) {
  const CellCover cover = cover_cells(k, n);
  DiscretizationComparison out;
  out.original = integer_points(minkowski_difference(k));

  // K_n - K_n only depends on the distinct cell offsets.
  std::set<LatticeVec> offsets;
  for (const auto a : cover.cells) {
    for (const auto b : cover.cells) offsets.insert(a - b);
  }
  BoxUnion kn_diff;
  for (const auto d : offsets) {
    kn_diff.boxes.push_back({Rational(d.x - 1, n), Rational(d.y - 1, n), Rational(d.x + 1, n), Rational(d.y + 1, n)});
  }
  out.discretized = integer_points(kn_diff);

  // K ⊆ K_n: every cell needed to cover each box must be present.
  for (const auto& b : k.boxes) {
    const auto x_lo = to_i64(floor(b.x0 * n));
    const auto x_hi = std::max(x_lo, to_i64(ceil(b.x1 * n)) - 1);
    const auto y_lo = to_i64(floor(b.y0 * n));
    const auto y_hi = std::max(y_lo, to_i64(ceil(b.y1 * n)) - 1);
    for (auto x = x_lo; x <= x_hi && out.contains_original; ++x) {
      for (auto y = y_lo; y <= y_hi; ++y) {
        if (!std::binary_search(cover.cells.begin(), cover.cells.end(), LatticeVec{x, y})) {
          out.contains_original = false;
          break;
        }
      }
    }
  }
  return out;
}

TileConfig reduce_to_transversal(const CellCover& cover) {
  const int n = cover.n;
  if (n < 1) throw Error("non-positive n");
  auto floor_div = [n](std::int64_t v) {
    std::int64_t q = v / n;
    if (v % n != 0 && v < 0) --q;
    return q;
  };
  std::vector<std::optional<LatticeVec>> chosen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto cell : cover.cells) {
    const LatticeVec u{floor_div(cell.x), floor_div(cell.y)};
    const auto i = static_cast<int>(cell.x - u.x * n);
    const auto j = static_cast<int>(cell.y - u.y * n);
    auto& slot = chosen[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    if (!slot || u < *slot) slot = u;
  }

  TileConfig config = TileConfig::uniform(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& slot = chosen[config.index(i, j)];
      if (!slot) throw Error("residue uncovered " + to_string(Cell{i, j}));
      config.at(i, j) = *slot;
    }
  }
  return normalize(config);
}

}  // namespace sqtile
