#include "sqtile/topology.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace sqtile {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t count) : parent_(count) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest index stays the root
  }

 private:
  std::vector<std::size_t> parent_;
};

constexpr std::array<LatticeVec, 4> kEdgeOffsets{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<LatticeVec, 8> kCornerOffsets{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

std::span<const LatticeVec> offsets(Adjacency mode) {
  if (mode == Adjacency::edge) return kEdgeOffsets;
  return kCornerOffsets;
}

std::size_t square_index(int n, int i, int j) {
  return static_cast<std::size_t>(wrap(i, n)) * static_cast<std::size_t>(n) + static_cast<std::size_t>(wrap(j, n));
}

// Groups squares carrying the same non-negative label into connected sets.
std::vector<std::vector<Cell>> connected_sets(int n, std::span<const int> label, Adjacency mode) {
  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  DisjointSets sets(count);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto s = square_index(n, i, j);
      if (label[s] < 0) continue;
      for (const auto d : offsets(mode)) {
        const auto t = square_index(n, i + static_cast<int>(d.x), j + static_cast<int>(d.y));
        if (label[t] == label[s]) sets.join(s, t);
      }
    }
  }
  std::map<std::size_t, std::vector<Cell>> groups;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto s = square_index(n, i, j);
      if (label[s] >= 0) groups[sets.find(s)].push_back({i, j});
    }
  }
  std::vector<std::vector<Cell>> out;
  for (auto& [root, cells] : groups) out.push_back(std::move(cells));
  return out;
}

std::vector<char> membership(const Component& c) {
  std::vector<char> in(static_cast<std::size_t>(c.n) * static_cast<std::size_t>(c.n), 0);
  for (const auto sq : c.squares) in[square_index(c.n, sq.i, sq.j)] = 1;
  return in;
}

Dir turn_left(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 1) % 4); }
Dir turn_right(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 3) % 4); }

std::pair<int, int> end_vertex(const DirectedEdge& e, int n) {
  const LatticeVec s = step(e.dir);
  return {wrap(e.i + static_cast<int>(s.x), n), wrap(e.j + static_cast<int>(s.y), n)};
}

// Splits a closed trail at repeated vertices into simple loops.
std::vector<std::vector<DirectedEdge>> split_simple(const std::vector<DirectedEdge>& trail) {
  std::vector<std::vector<DirectedEdge>> loops;
  std::vector<DirectedEdge> stack;
  std::map<std::pair<int, int>, std::size_t> position;
  for (const auto& e : trail) {
    const std::pair<int, int> v{e.i, e.j};
    if (auto it = position.find(v); it != position.end()) {
      const std::size_t p = it->second;
      std::vector<DirectedEdge> loop(stack.begin() + static_cast<std::ptrdiff_t>(p), stack.end());
      for (const auto& le : loop) position.erase({le.i, le.j});
      stack.resize(p);
      loops.push_back(std::move(loop));
    }
    position[v] = stack.size();
    stack.push_back(e);
  }
  if (!stack.empty()) loops.push_back(std::move(stack));
  return loops;
}

}  // namespace

std::string to_string(Adjacency a) { return a == Adjacency::corner ? "corner" : "edge"; }

bool Component::contains(Cell c) const { return std::binary_search(squares.begin(), squares.end(), c); }

std::vector<Component> components(int n, std::span<const Color> squares, Adjacency mode) {
  std::vector<int> label(squares.size());
  std::transform(squares.begin(), squares.end(), label.begin(), [](Color c) { return static_cast<int>(c); });
  std::vector<Component> out;
  for (auto& cells : connected_sets(n, label, mode)) {
    Component comp;
    comp.n = n;
    comp.mode = mode;
    comp.color = squares[square_index(n, cells.front().i, cells.front().j)];
    comp.squares = std::move(cells);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Component> components(const EdgeColoring& ec, Adjacency mode) {
  const SquareClassification sc = square_colors(ec);
  if (!sc.valid()) {
    const auto& v = sc.violations.front();
    throw Error("coloring invalid: square " + to_string(v.square) + " " + v.rule);
  }
  return components(ec.n, sc.squares, mode);
}

LatticeVec step(Dir d) {
  switch (d) {
    case Dir::east: return {1, 0};
    case Dir::north: return {0, 1};
    case Dir::west: return {-1, 0};
    case Dir::south: return {0, -1};
  }
  return {};
}

bool Curve::is_closed() const {
  if (edges.empty()) return true;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto next = edges[(k + 1) % edges.size()];
    if (end_vertex(edges[k], n) != std::pair{next.i, next.j}) return false;
  }
  return true;
}

bool Curve::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (!seen.insert({e.i, e.j}).second) return false;
  }
  return true;
}

std::string to_string(const Curve& c) {
  static constexpr const char* kDir = "ENWS";
  if (c.edges.empty()) return "[]";
  std::string s = "(" + std::to_string(c.edges.front().i) + "," + std::to_string(c.edges.front().j) + ") ";
  for (const auto& e : c.edges) s += kDir[static_cast<int>(e.dir)];
  return s;
}

std::pair<EdgeRef, bool> undirected(const DirectedEdge& e, int n) {
  switch (e.dir) {
    case Dir::east: return {{EdgeKind::h, e.i, e.j}, false};
    case Dir::west: return {{EdgeKind::h, wrap(e.i - 1, n), e.j}, true};
    case Dir::north: return {{EdgeKind::v, e.i, e.j}, false};
    case Dir::south: return {{EdgeKind::v, e.i, wrap(e.j - 1, n)}, true};
  }
  return {};
}

Curve make_curve(int n, int i, int j, std::span<const Dir> steps) {
  Curve c;
  c.n = n;
  int ci = wrap(i, n), cj = wrap(j, n);
  for (Dir d : steps) {
    c.edges.push_back({ci, cj, d});
    std::tie(ci, cj) = end_vertex(c.edges.back(), n);
  }
  if (!c.is_closed()) throw Error("curve not closed");
  return c;
}

std::vector<Curve> boundary_curves(const Component& c) {
  const int n = c.n;
  const auto in = membership(c);
  auto inside = [&](int i, int j) { return in[square_index(n, i, j)] != 0; };

  std::vector<DirectedEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // h(i,j): square (i,j) above, (i,j-1) below.
      if (inside(i, j) && !inside(i, j - 1)) edges.push_back({i, j, Dir::east});
      if (inside(i, j - 1) && !inside(i, j)) edges.push_back({wrap(i + 1, n), j, Dir::west});
      // v(i,j): square (i-1,j) left, (i,j) right.
      if (inside(i - 1, j) && !inside(i, j)) edges.push_back({i, j, Dir::north});
      if (inside(i, j) && !inside(i - 1, j)) edges.push_back({i, wrap(j + 1, n), Dir::south});
    }
  }
  std::sort(edges.begin(), edges.end());

  std::map<DirectedEdge, std::size_t> index;
  for (std::size_t k = 0; k < edges.size(); ++k) index[edges[k]] = k;

  // Each boundary vertex has equal in- and out-degree, so preferring left,
  // then straight, then right pairs incoming with outgoing edges bijectively.
  auto next = [&](std::size_t k) {
    const auto [wi, wj] = end_vertex(edges[k], n);
    const Dir d = edges[k].dir;
    for (Dir out : {turn_left(d), d, turn_right(d)}) {
      if (auto it = index.find({wi, wj, out}); it != index.end()) return it->second;
    }
    throw std::logic_error("boundary edge without successor");
  };

  std::vector<Curve> curves;
  std::vector<char> used(edges.size(), 0);
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    std::vector<DirectedEdge> trail;
    for (std::size_t k = start; !used[k]; k = next(k)) {
      used[k] = 1;
      trail.push_back(edges[k]);
    }
    for (auto& loop : split_simple(trail)) {
      std::rotate(loop.begin(), std::min_element(loop.begin(), loop.end()), loop.end());
      curves.push_back({n, std::move(loop)});
    }
  }
  std::sort(curves.begin(), curves.end(), [](const Curve& a, const Curve& b) { return a.edges < b.edges; });
  return curves;
}

LatticeVec curve_gain(const Curve& curve, const EdgeLabeling& el) {
  LatticeVec sum;
  for (const auto& e : curve.edges) {
    const auto [edge, backward] = undirected(e, el.n);
    if (backward) sum -= el.at(edge);
    else sum += el.at(edge);
  }
  return sum;
}

LatticeVec homotopy_class(const Curve& curve) {
  if (!curve.is_closed()) throw Error("curve not closed");
  LatticeVec disp;
  for (const auto& e : curve.edges) disp += step(e.dir);
  return {disp.x / curve.n, disp.y / curve.n};
}

LatticeSpan pi1_image(const Component& c) {
  const int n = c.n;
  const auto in = membership(c);
  std::vector<LatticeVec> lift(in.size());
  std::vector<char> seen(in.size(), 0);
  std::vector<LatticeVec> periods;

  std::deque<Cell> queue;
  if (!c.squares.empty()) {
    const Cell root = c.squares.front();
    seen[square_index(n, root.i, root.j)] = 1;
    lift[square_index(n, root.i, root.j)] = {root.i, root.j};
    queue.push_back(root);
  }
  while (!queue.empty()) {
    const Cell s = queue.front();
    queue.pop_front();
    const LatticeVec ls = lift[square_index(n, s.i, s.j)];
    for (const auto d : offsets(c.mode)) {
      const int ti = wrap(s.i + static_cast<int>(d.x), n);
      const int tj = wrap(s.j + static_cast<int>(d.y), n);
      const auto t = square_index(n, ti, tj);
      if (!in[t]) continue;
      if (!seen[t]) {
        seen[t] = 1;
        lift[t] = ls + d;
        queue.push_back({ti, tj});
      } else {
        const LatticeVec period = ls + d - lift[t];
        if (!period.is_zero()) periods.push_back({period.x / n, period.y / n});
      }
    }
  }
  return hermite_span(periods);
}

std::vector<Component> edge_connected_pieces(const Component& c) {
  std::vector<int> label(static_cast<std::size_t>(c.n) * static_cast<std::size_t>(c.n), -1);
  for (const auto sq : c.squares) label[square_index(c.n, sq.i, sq.j)] = 0;
  std::vector<Component> out;
  for (auto& cells : connected_sets(c.n, label, Adjacency::edge)) {
    out.push_back({c.n, c.color, Adjacency::edge, std::move(cells)});
  }
  return out;
}

std::string to_string(AuditStage s) {
  switch (s) {
    case AuditStage::axes: return "axes";
    case AuditStage::cocycle: return "cocycle";
    case AuditStage::edge_axes: return "edge_axes";
    case AuditStage::square_rules: return "square_rules";
    case AuditStage::boundary_white: return "boundary_white";
    case AuditStage::boundary_contractible: return "boundary_contractible";
    case AuditStage::red_noncontractible: return "red_noncontractible";
    case AuditStage::pi1_dichotomy: return "pi1_dichotomy";
    case AuditStage::contradiction: return "contradiction";
  }
  return "axes";
}

AuditReport audit_labeling(const EdgeLabeling& el) {
  const int n = el.n;
  AuditReport r;

  r.stage = AuditStage::cocycle;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const LatticeVec s = cocycle_sum(el, i, j);
      if (!s.is_zero()) {
        r.detail = "nonzero square sum";
        r.square = Cell{i, j};
        r.witness = s;
        return r;
      }
    }
  }
  if (const auto g = row_gain(el, 0); g != LatticeVec{-1, 0}) {
    r.detail = "row 0 gain is not (-1,0)";
    r.gain = g;
    return r;
  }
  if (const auto g = column_gain(el, 0); g != LatticeVec{0, -1}) {
    r.detail = "column 0 gain is not (0,-1)";
    r.gain = g;
    return r;
  }

  r.stage = AuditStage::edge_axes;
  const ColoringResult colored = color_edges(el);
  if (!colored.coloring) {
    r.detail = "edge value off both axes";
    r.edge = colored.off_axes.front().edge;
    r.witness = colored.off_axes.front().value;
    return r;
  }
  const EdgeColoring& ec = *colored.coloring;

  r.stage = AuditStage::square_rules;
  const SquareClassification sc = square_colors(ec);
  if (!sc.valid()) {
    r.detail = sc.violations.front().rule;
    r.square = sc.violations.front().square;
    return r;
  }

  const auto comps = components(n, sc.squares, Adjacency::corner);
  std::vector<std::vector<Curve>> boundaries;
  for (const auto& comp : comps) boundaries.push_back(boundary_curves(comp));

  r.stage = AuditStage::boundary_white;
  for (std::size_t id = 0; id < comps.size(); ++id) {
    if (comps[id].color == Color::white) continue;
    for (const auto& curve : boundaries[id]) {
      for (const auto& e : curve.edges) {
        const EdgeRef ref = undirected(e, n).first;
        if (ec.at(ref) != Color::white) {
          r.detail = "colored boundary edge";
          r.component_id = static_cast<int>(id);
          r.edge = ref;
          r.curve = curve;
          return r;
        }
      }
    }
  }

  r.stage = AuditStage::boundary_contractible;
  for (std::size_t id = 0; id < comps.size(); ++id) {
    for (const auto& curve : boundaries[id]) {
      const LatticeVec w = homotopy_class(curve);
      if (!w.is_zero()) {
        r.detail = "non-contractible boundary curve";
        r.component_id = static_cast<int>(id);
        r.curve = curve;
        r.winding = w;
        r.gain = curve_gain(curve, el);
        return r;
      }
    }
  }

  r.stage = AuditStage::red_noncontractible;
  std::optional<std::size_t> red_id;
  LatticeSpan red_span;
  for (std::size_t id = 0; id < comps.size() && !red_id; ++id) {
    if (comps[id].color != Color::red) continue;
    const LatticeSpan span = pi1_image(comps[id]);
    if (span.rank > 0) {
      red_id = id;
      red_span = span;
    }
  }
  if (!red_id) {
    r.detail = "no red component carries a non-contractible loop";
    r.gain = row_gain(el, 0);
    return r;
  }

  r.stage = AuditStage::pi1_dichotomy;
  r.component_id = static_cast<int>(*red_id);
  if (red_span.rank != 2) {
    r.detail = "red component image has rank " + std::to_string(red_span.rank);
    r.winding = red_span.basis.front();
    return r;
  }

  // A rank-2 red component holds a loop winding (0,1); its gain would have to
  // be (0,-1), but red and white edges carry no y-component.
  r.stage = AuditStage::contradiction;
  r.failed = false;
  r.detail = "red component contains a loop of class (0,1) whose gain cannot be (0,-1)";
  r.winding = LatticeVec{0, 1};
  r.gain = LatticeVec{0, -1};
  return r;
}

AuditReport audit_config(const TileConfig& config) {
  require_valid(config);
  if (!is_normalized(config)) throw Error("config not normalized");
  const DiffSet d = difference_set(config, true);
  const AxesVerdict verdict = axes_subset(d);
  if (!verdict.on_axes) {
    AuditReport r;
    r.stage = AuditStage::axes;
    r.detail = "difference set leaves the coordinate axes";
    r.witness = verdict.witness;
    r.witness_pairs = verdict.witness_pairs;
    return r;
  }
  return audit_labeling(edge_labels(config));
}

}  // namespace sqtile
