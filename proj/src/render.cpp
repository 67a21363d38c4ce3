#include "sqtile/render.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "sqtile/topology.hpp"

namespace sqtile {

namespace {

constexpr const char* kStrokeWhite = "#ffffff";
constexpr const char* kStrokeRed = "#ff4040";
constexpr const char* kStrokeBlue = "#40a0ff";
constexpr const char* kStrokeOffAxes = "#ffd700";

constexpr std::array<const char*, 4> kRedTints{"#7a2626", "#943434", "#662020", "#a84444"};
constexpr std::array<const char*, 4> kBlueTints{"#26447a", "#345894", "#203866", "#4466a8"};
constexpr std::array<const char*, 4> kWhiteTints{"#505050", "#5e5e5e", "#444444", "#6a6a6a"};
constexpr const char* kViolationFill = "#000000";
constexpr const char* kPlainFill = "#555555";

const char* tint(Color c, std::size_t k) {
  switch (c) {
    case Color::red: return kRedTints[k % kRedTints.size()];
    case Color::blue: return kBlueTints[k % kBlueTints.size()];
    case Color::white: return kWhiteTints[k % kWhiteTints.size()];
  }
  return kPlainFill;
}

// Edge appearance: color, or nullopt for an off-axes value.
using EdgeStyle = std::optional<Color>;

const char* stroke(EdgeStyle s) {
  if (!s) return kStrokeOffAxes;
  switch (*s) {
    case Color::white: return kStrokeWhite;
    case Color::red: return kStrokeRed;
    case Color::blue: return kStrokeBlue;
  }
  return kStrokeWhite;
}

std::string render(int n, const EdgeField<EdgeStyle>& styles, const EdgeLabeling* labels, const RenderSpec& spec) {
  if (spec.cell_px < 4) throw Error("cell_px too small");
  const int px = spec.cell_px;
  const int margin = px;
  const int size = n * px + 2 * margin;
  auto X = [&](int i) { return margin + i * px; };
  auto Y = [&](int j) { return margin + (n - j) * px; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"#2a2a2a\"/>\n";

  bool all_axes = true;
  EdgeColoring coloring(n);
  for (std::size_t k = 0; k < styles.h.size(); ++k) {
    all_axes = all_axes && styles.h[k] && styles.v[k];
    coloring.h[k] = styles.h[k].value_or(Color::white);
    coloring.v[k] = styles.v[k].value_or(Color::white);
  }

  if (spec.colors) {
    const SquareClassification sc = square_colors(coloring);
    std::vector<std::string> fill(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kPlainFill);
    if (all_axes && sc.valid()) {
      const auto comps = components(n, sc.squares, Adjacency::corner);
      for (std::size_t id = 0; id < comps.size(); ++id) {
        for (const auto sq : comps[id].squares) {
          fill[static_cast<std::size_t>(sq.i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(sq.j)] =
              spec.components ? tint(comps[id].color, id) : tint(comps[id].color, 0);
        }
      }
    } else {
      for (const auto& v : sc.violations) {
        fill[static_cast<std::size_t>(v.square.i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v.square.j)] =
            kViolationFill;
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        svg << "<rect class=\"square\" x=\"" << X(i) << "\" y=\"" << Y(j + 1) << "\" width=\"" << px << "\" height=\""
            << px << "\" fill=\"" << fill[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]
            << "\"/>\n";
      }
    }
  }

  if (spec.edges) {
    const int width = std::max(1, px / 12);
    auto line = [&](int x1, int y1, int x2, int y2, EdgeStyle s) {
      svg << "<line class=\"edge\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"" << stroke(s) << "\" stroke-width=\"" << width << "\""
          << (s ? "" : " stroke-dasharray=\"4,2\"") << "/>\n";
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= n; ++j) line(X(i), Y(j), X(i + 1), Y(j), styles.hor(i, j));
    }
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < n; ++j) line(X(i), Y(j), X(i), Y(j + 1), styles.ver(i, j));
    }
  }

  const int font = std::max(6, px / 5);
  auto text = [&](int x, int y, const std::string& s) {
    svg << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << font
        << "\" font-family=\"monospace\" fill=\"#f0f0f0\" text-anchor=\"middle\">" << s << "</text>\n";
  };
  if (labels && spec.labels) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= n; ++j) text(X(i) + px / 2, Y(j) - 2, to_string(labels->hor(i, j)));
    }
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < n; ++j) text(X(i) + 2, Y(j) - px / 2, to_string(labels->ver(i, j)));
    }
  }
  if (labels && spec.gains) {
    for (int j = 0; j < n; ++j) text(X(n) + margin / 2, Y(j) - px / 2, to_string(row_gain(*labels, j)));
    for (int i = 0; i < n; ++i) text(X(i) + px / 2, margin / 2, to_string(column_gain(*labels, i)));
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

RenderSpec parse_show_flags(const std::string& flags, int cell_px) {
  RenderSpec spec;
  spec.cell_px = cell_px;
  spec.edges = spec.colors = spec.components = spec.gains = spec.labels = false;
  std::istringstream in(flags);
  for (std::string item; std::getline(in, item, ',');) {
    if (item == "edges") spec.edges = true;
    else if (item == "colors") spec.colors = true;
    else if (item == "components") spec.components = spec.colors = true;
    else if (item == "gains") spec.gains = true;
    else if (item == "labels") spec.labels = true;
    else if (!item.empty()) throw Error("unknown show flag '" + item + "'");
  }
  return spec;
}

std::string render_config(const TileConfig& config, const RenderSpec& spec) {
  if (spec.cell_px < 4) throw Error("cell_px too small");
  const EdgeLabeling el = edge_labels(normalize(config));
  EdgeField<EdgeStyle> styles(el.n);
  for (std::size_t k = 0; k < el.h.size(); ++k) {
    if (el.h[k].on_axes()) styles.h[k] = classify_value(el.h[k]);
    if (el.v[k].on_axes()) styles.v[k] = classify_value(el.v[k]);
  }
  return render(el.n, styles, &el, spec);
}

std::string render_coloring(const EdgeColoring& ec, const RenderSpec& spec) {
  EdgeField<EdgeStyle> styles(ec.n);
  for (std::size_t k = 0; k < ec.h.size(); ++k) {
    styles.h[k] = ec.h[k];
    styles.v[k] = ec.v[k];
  }
  return render(ec.n, styles, nullptr, spec);
}

}  // namespace sqtile
