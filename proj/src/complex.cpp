#include "sqtile/complex.hpp"

namespace sqtile {

std::string to_string(EdgeRef e) {
  return std::string(e.kind == EdgeKind::h ? "h" : "v") + "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

std::string to_string(Color c) {
  switch (c) {
    case Color::white: return "white";
    case Color::red: return "red";
    case Color::blue: return "blue";
  }
  return "white";
}

std::optional<Color> parse_color(const std::string& s) {
  if (s == "white") return Color::white;
  if (s == "red") return Color::red;
  if (s == "blue") return Color::blue;
  return std::nullopt;
}

VertexLabeling vertex_labels(const TileConfig& config) {
  require_valid(config);
  if (!is_normalized(config)) throw Error("config not normalized");
  const int n = config.n;
  VertexLabeling vl;
  vl.n = n;
  vl.labels.resize(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) vl.at(i, j) = config.at(i, j);
  }
  for (int j = 0; j < n; ++j) vl.at(n, j) = config.at(0, j) + LatticeVec{-1, 0};
  for (int i = 0; i < n; ++i) vl.at(i, n) = config.at(i, 0) + LatticeVec{0, -1};
  vl.at(n, n) = {-1, -1};
  return vl;
}

EdgeLabeling edge_labels(const VertexLabeling& vl) {
  const int n = vl.n;
  if (n < 1) throw Error("non-positive n");
  EdgeLabeling el(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const LatticeVec value = vl.at(i + 1, j) - vl.at(i, j);
      if (j == n) {
        if (value != el.hor(i, 0)) throw Error("seam mismatch at " + to_string(EdgeRef{EdgeKind::h, i, n}));
      } else {
        el.hor(i, j) = value;
      }
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j < n; ++j) {
      const LatticeVec value = vl.at(i, j + 1) - vl.at(i, j);
      if (i == n) {
        if (value != el.ver(0, j)) throw Error("seam mismatch at " + to_string(EdgeRef{EdgeKind::v, n, j}));
      } else {
        el.ver(i, j) = value;
      }
    }
  }
  return el;
}

LatticeVec cocycle_sum(const EdgeLabeling& el, int i, int j) {
  return el.hor(i, j) + el.ver(i + 1, j) - el.hor(i, j + 1) - el.ver(i, j);
}

LatticeVec row_gain(const EdgeLabeling& el, int j) {
  LatticeVec s;
  for (int i = 0; i < el.n; ++i) s += el.hor(i, j);
  return s;
}

LatticeVec column_gain(const EdgeLabeling& el, int i) {
  LatticeVec s;
  for (int j = 0; j < el.n; ++j) s += el.ver(i, j);
  return s;
}

Color classify_value(LatticeVec v) {
  if (v.is_zero()) return Color::white;
  return v.y == 0 ? Color::red : Color::blue;
}

ColoringResult color_edges(const EdgeLabeling& el) {
  ColoringResult out;
  EdgeColoring ec(el.n);
  for (int i = 0; i < el.n; ++i) {
    for (int j = 0; j < el.n; ++j) {
      for (EdgeKind kind : {EdgeKind::h, EdgeKind::v}) {
        const EdgeRef e{kind, i, j};
        const LatticeVec value = el.at(e);
        if (!value.on_axes()) {
          out.off_axes.push_back({e, value});
        } else {
          ec.at(e) = classify_value(value);
        }
      }
    }
  }
  if (out.off_axes.empty()) out.coloring = std::move(ec);
  return out;
}

SquareClassification square_colors(const EdgeColoring& ec) {
  const int n = ec.n;
  SquareClassification out;
  out.n = n;
  out.squares.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Color::white);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Color sides[4] = {ec.hor(i, j), ec.hor(i, j + 1), ec.ver(i, j), ec.ver(i + 1, j)};
      int red = 0, blue = 0;
      for (Color c : sides) {
        red += c == Color::red;
        blue += c == Color::blue;
      }
      if (red > 0 && blue > 0) out.violations.push_back({{i, j}, "red and blue"});
      else if (red == 1) out.violations.push_back({{i, j}, "single red"});
      else if (blue == 1) out.violations.push_back({{i, j}, "single blue"});
      Color& sq = out.squares[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
      if (red > 0 && blue == 0) sq = Color::red;
      else if (blue > 0 && red == 0) sq = Color::blue;
    }
  }
  return out;
}

}  // namespace sqtile
