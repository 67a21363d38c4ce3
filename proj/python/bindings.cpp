#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqtile/complex.hpp"
#include "sqtile/diffset.hpp"
#include "sqtile/discretize.hpp"
#include "sqtile/io.hpp"
#include "sqtile/render.hpp"
#include "sqtile/search.hpp"
#include "sqtile/topology.hpp"

namespace py = pybind11;
using namespace sqtile;

// LatticeVec <-> (x, y) tuple.
namespace pybind11::detail {
template <>
struct type_caster<LatticeVec> {
  PYBIND11_TYPE_CASTER(LatticeVec, const_name("tuple[int, int]"));

  bool load(handle src, bool) {
    if (!isinstance<sequence>(src)) return false;
    const auto seq = reinterpret_borrow<sequence>(src);
    if (seq.size() != 2) return false;
    value = {seq[0].cast<std::int64_t>(), seq[1].cast<std::int64_t>()};
    return true;
  }

  static handle cast(LatticeVec v, return_value_policy, handle) { return py::make_tuple(v.x, v.y).release(); }
};
}  // namespace pybind11::detail

namespace {

py::object big(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::dict span_dict(const LatticeSpan& s) {
  py::dict d;
  d["rank"] = s.rank;
  d["basis"] = s.basis;
  d["index"] = s.index ? py::cast(*s.index) : py::none();
  return d;
}

py::tuple cell(Cell c) { return py::make_tuple(c.i, c.j); }

Color color_of(const std::string& s) {
  const auto c = parse_color(s);
  if (!c) throw Error("unknown color '" + s + "'");
  return *c;
}

Adjacency mode_of(const std::string& s) {
  if (s == "corner") return Adjacency::corner;
  if (s == "edge") return Adjacency::edge;
  throw Error("unknown mode '" + s + "'");
}

std::vector<Component> components_of(int n, const std::vector<std::string>& squares, const std::string& mode) {
  std::vector<Color> colors;
  for (const auto& s : squares) colors.push_back(color_of(s));
  if (colors.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) throw Error("wrong square count");
  return components(n, colors, mode_of(mode));
}

py::dict audit_dict(const AuditReport& r) {
  py::dict d;
  d["stage"] = to_string(r.stage);
  d["failed"] = r.failed;
  d["detail"] = r.detail;
  d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
  d["square"] = r.square ? py::object(cell(*r.square)) : py::none();
  d["component_id"] = r.component_id ? py::cast(*r.component_id) : py::none();
  d["gain"] = r.gain ? py::cast(*r.gain) : py::none();
  d["class"] = r.winding ? py::cast(*r.winding) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tilings of the torus by grid squares: difference sets, cocycles, components, bounded search";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<TileConfig>(m, "TileConfig")
      .def(py::init([](int n, std::vector<LatticeVec> translates) {
             TileConfig c{n, std::move(translates)};
             require_valid(c);
             return c;
           }),
           py::arg("n"), py::arg("translates"))
      .def_static("uniform", &TileConfig::uniform, py::arg("n"), py::arg("u") = LatticeVec{})
      .def_static("parse", [](const std::string& text) { return parse_config(text); })
      .def_readonly("n", &TileConfig::n)
      .def_readonly("translates", &TileConfig::translates)
      .def("at", [](const TileConfig& c, int i, int j) { return c.at(i, j); })
      .def("emit", [](const TileConfig& c) { return emit_config(c); })
      .def("normalize", [](const TileConfig& c) { return normalize(c); })
      .def("is_normalized", [](const TileConfig& c) { return is_normalized(c); })
      .def("__eq__", [](const TileConfig& a, const TileConfig& b) { return a == b; })
      .def("__repr__", [](const TileConfig& c) { return "<TileConfig n=" + std::to_string(c.n) + ">"; });

  m.def("difference_set", [](const TileConfig& c) { return difference_set(c).vectors(); });
  m.def("geometric_difference_set", [](const TileConfig& c) { return geometric_difference_set(c).vectors(); });
  m.def("axes_subset", [](const TileConfig& c) {
    const auto v = axes_subset(difference_set(c, true));
    py::dict d;
    d["on_axes"] = v.on_axes;
    d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    py::list pairs;
    for (const auto& w : v.witness_pairs) pairs.append(py::make_tuple(cell(w.p), cell(w.q), w.m));
    d["witness_pairs"] = pairs;
    return d;
  });
  m.def("lattice_span", [](const std::vector<LatticeVec>& gens) { return span_dict(hermite_span(gens)); });

  m.def("integer_gap", [](const std::string& boxes) {
    const auto g = integer_gap(parse_boxes(boxes));
    return py::make_tuple(format_rational(g.gap_squared), g.min_resolution);
  });
  m.def("check_discretization",
        [](const std::string& boxes, int n) { return check_discretization(parse_boxes(boxes), n); });
  m.def("reduce_to_transversal",
        [](const std::string& boxes, int n) { return reduce_to_transversal(cover_cells(parse_boxes(boxes), n)); });

  m.def("edge_labels", [](const TileConfig& c) {
    const EdgeLabeling el = edge_labels(c);
    py::dict d;
    d["n"] = el.n;
    d["h"] = el.h;
    d["v"] = el.v;
    return d;
  }, "Edge values; h and v are row-major lists indexed i * n + j.");
  m.def("audit", [](const TileConfig& c) { return audit_dict(audit_config(c)); });

  m.def("components", [](int n, const std::vector<std::string>& squares, const std::string& mode) {
    py::list out;
    for (const auto& comp : components_of(n, squares, mode)) {
      py::dict d;
      d["color"] = to_string(comp.color);
      py::list sq;
      for (auto c : comp.squares) sq.append(cell(c));
      d["squares"] = sq;
      d["pi1"] = span_dict(pi1_image(comp));
      py::list classes;
      for (const auto& curve : boundary_curves(comp)) classes.append(py::cast(homotopy_class(curve)));
      d["boundary_classes"] = classes;
      d["pieces"] = edge_connected_pieces(comp).size();
      out.append(d);
    }
    return out;
  }, py::arg("n"), py::arg("squares"), py::arg("mode") = "corner",
     "Components of a square coloring given row-major as 'white'/'red'/'blue'.");

  m.def("search", [](int n, int bound, const std::string& engine, bool symmetry, unsigned jobs, std::uint64_t budget) {
    SearchSpec s;
    s.n = n;
    s.bound = bound;
    if (engine == "plain") s.engine = Engine::plain;
    else if (engine == "pruned") s.engine = Engine::pruned;
    else throw Error("unknown engine '" + engine + "'");
    s.symmetry = symmetry;
    s.jobs = jobs;
    s.budget = budget;
    SearchReport r;
    {
      py::gil_scoped_release release;
      r = run_search(s);
    }
    py::dict d;
    d["configs_enumerated"] = big(r.configs_enumerated);
    d["nodes_visited"] = r.nodes_visited;
    d["leaves_reached"] = r.leaves_reached;
    d["symmetry_skipped"] = r.symmetry_skipped;
    d["valid_found"] = r.valid_found;
    py::dict hist;
    for (const auto& [w, count] : r.witness_histogram) hist[py::cast(w)] = big(count);
    d["witness_histogram"] = hist;
    d["valid_configs"] = r.valid_configs;
    return d;
  }, py::arg("n"), py::arg("bound"), py::arg("engine") = "pruned", py::arg("symmetry") = false,
     py::arg("jobs") = 1, py::arg("budget") = 50'000'000);

  m.def("render_config", [](const TileConfig& c, int cell_px, const std::string& show) {
    return render_config(c, parse_show_flags(show, cell_px));
  }, py::arg("config"), py::arg("cell_px") = 48, py::arg("show") = "edges,colors,components");
}
