// sqtile: command-line front end.
//
//   sqtile check <config>        difference set, axes verdict, span, audit
//   sqtile discretize <boxes>    gap, minimal resolution, cover, transversal
//   sqtile search --n N --bound B
//   sqtile analyze <coloring|config>
//   sqtile render <coloring|config> --out file.svg

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqtile/complex.hpp"
#include "sqtile/diffset.hpp"
#include "sqtile/discretize.hpp"
#include "sqtile/io.hpp"
#include "sqtile/render.hpp"
#include "sqtile/search.hpp"
#include "sqtile/topology.hpp"

using nlohmann::json;
using namespace sqtile;

namespace {

json vec_json(LatticeVec v) { return json::array({v.x, v.y}); }

json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

json span_json(const LatticeSpan& s) {
  json j;
  j["rank"] = s.rank;
  j["basis"] = json::array();
  for (auto v : s.basis) j["basis"].push_back(vec_json(v));
  j["index"] = s.index ? json(*s.index) : json(nullptr);
  return j;
}

json witness_pairs_json(const std::vector<DiffWitness>& pairs) {
  json out = json::array();
  for (const auto& w : pairs) {
    out.push_back({{"p", {w.p.i, w.p.j}}, {"q", {w.q.i, w.q.j}}, {"m", vec_json(w.m)}});
  }
  return out;
}

std::string pair_text(const DiffWitness& w) {
  return "p=" + to_string(w.p) + " q=" + to_string(w.q) + " m=" + to_string(w.m);
}

json audit_json(const AuditReport& r) {
  json j;
  j["stage"] = to_string(r.stage);
  j["failed"] = r.failed;
  j["detail"] = r.detail;
  j["witness"] = r.witness ? vec_json(*r.witness) : json(nullptr);
  j["witness_pairs"] = witness_pairs_json(r.witness_pairs);
  j["edge"] = r.edge ? json(to_string(*r.edge)) : json(nullptr);
  j["square"] = r.square ? json({r.square->i, r.square->j}) : json(nullptr);
  j["component_id"] = r.component_id ? json(*r.component_id) : json(nullptr);
  j["curve"] = r.curve ? json(to_string(*r.curve)) : json(nullptr);
  j["gain"] = r.gain ? vec_json(*r.gain) : json(nullptr);
  j["class"] = r.winding ? vec_json(*r.winding) : json(nullptr);
  return j;
}

void print_audit_text(const AuditReport& r) {
  std::cout << "audit: stage=" << to_string(r.stage) << (r.failed ? " failed" : " complete") << " (" << r.detail << ")";
  if (r.witness) std::cout << " witness " << to_string(*r.witness);
  if (r.edge) std::cout << " edge " << to_string(*r.edge);
  if (r.square) std::cout << " square " << to_string(*r.square);
  if (r.component_id) std::cout << " component " << *r.component_id;
  if (r.curve) std::cout << " curve " << to_string(*r.curve);
  if (r.gain) std::cout << " gain " << to_string(*r.gain);
  if (r.winding) std::cout << " class " << to_string(*r.winding);
  std::cout << "\n";
}

int cmd_check(const std::string& path, bool as_json, bool print_set) {
  const TileConfig raw = parse_config(read_file(path));
  const TileConfig config = normalize(raw);
  const DiffSet d = difference_set(config, true);
  const AxesVerdict verdict = axes_subset(d);
  const LatticeSpan span = lattice_span(d);
  const AuditReport audit = audit_config(config);

  if (as_json) {
    json j;
    j["n"] = config.n;
    j["normalized"] = is_normalized(raw);
    j["diffset_size"] = d.size();
    j["axes"] = {{"subset", verdict.on_axes},
                 {"witness", verdict.witness ? vec_json(*verdict.witness) : json(nullptr)},
                 {"witness_pairs", witness_pairs_json(verdict.witness_pairs)}};
    j["generates"] = span.generates_all();
    j["span"] = span_json(span);
    j["audit"] = audit_json(audit);
    if (print_set) {
      j["diffset"] = json::array();
      for (auto v : d.vectors()) j["diffset"].push_back(vec_json(v));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n: " << config.n << (is_normalized(raw) ? "" : " (normalized from input)") << "\n";
  std::cout << "difference set: " << d.size() << " vectors\n";
  std::cout << "axes: " << (verdict.on_axes ? "true" : "false");
  if (verdict.witness) {
    std::cout << " witness " << to_string(*verdict.witness);
    if (!verdict.witness_pairs.empty()) std::cout << " via " << pair_text(verdict.witness_pairs.front());
  }
  std::cout << "\n";
  std::cout << "generates: " << (span.generates_all() ? "true" : "false") << " (" << to_string(span) << ")\n";
  print_audit_text(audit);
  if (print_set) {
    for (auto v : d.vectors()) std::cout << to_string(v) << "\n";
  }
  return 0;
}

int cmd_discretize(const std::string& path, std::optional<int> n_opt, bool reduce, bool as_json) {
  const BoxUnion k = parse_boxes(read_file(path));
  const GapResult gap = integer_gap(k);
  const int n = n_opt.value_or(static_cast<int>(gap.min_resolution));
  const CellCover cover = cover_cells(k, n);
  const DiscretizationComparison cmp = compare_discretization(k, n);
  std::optional<TileConfig> transversal;
  std::string reduce_error;
  if (reduce) {
    try {
      transversal = reduce_to_transversal(cover);
    } catch (const Error& e) {
      reduce_error = e.what();
    }
  }

  if (as_json) {
    json j;
    j["gap_squared"] = format_rational(gap.gap_squared);
    j["n0"] = gap.min_resolution;
    j["n"] = n;
    j["cells"] = cover.cells.size();
    j["exact"] = cmp.exact();
    j["covers"] = cmp.contains_original;
    if (reduce) {
      j["transversal"] = transversal ? json(emit_config(*transversal)) : json(nullptr);
      if (!reduce_error.empty()) j["transversal_error"] = reduce_error;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "gap_squared: " << format_rational(gap.gap_squared) << "\n";
  std::cout << "n0: " << gap.min_resolution << "\n";
  std::cout << "n: " << n << "\n";
  std::cout << "cells: " << cover.cells.size() << "\n";
  std::cout << "integer differences preserved: " << (cmp.exact() ? "true" : "false") << "\n";
  if (reduce) {
    if (transversal) std::cout << emit_config(*transversal);
    else std::cout << "transversal: " << reduce_error << "\n";
  }
  return 0;
}

int cmd_search(SearchSpec spec, bool as_json, const std::string& dump_prefix) {
  const SearchReport report = run_search(spec);
  std::optional<bool> verified;
  if (spec.retain_witnesses) verified = verify_witnesses(report);

  for (std::size_t k = 0; k < report.valid_configs.size(); ++k) {
    const std::string path = dump_prefix + std::to_string(k) + ".cfg";
    std::ofstream(path) << emit_config(report.valid_configs[k]);
    std::cerr << "valid configuration written to " << path << "\n";
  }

  if (as_json) {
    json j;
    j["n"] = spec.n;
    j["bound"] = spec.bound;
    j["engine"] = to_string(spec.engine);
    j["symmetry"] = spec.symmetry;
    j["scope"] = "translates with max-norm <= bound, u(0,0) = (0,0)";
    j["configs_enumerated"] = big_json(report.configs_enumerated);
    j["nodes_visited"] = report.nodes_visited;
    j["leaves_reached"] = report.leaves_reached;
    j["symmetry_skipped"] = report.symmetry_skipped;
    j["valid_found"] = report.valid_found;
    j["witness_histogram"] = json::array();
    for (const auto& [w, count] : report.witness_histogram) {
      j["witness_histogram"].push_back({{"witness", vec_json(w)}, {"configs", big_json(count)}});
    }
    if (verified) {
      j["witnesses_retained"] = report.witnesses.size();
      j["witnesses_verified"] = *verified;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# bounded search: n=" << spec.n << ", |u|_inf <= " << spec.bound << ", u(0,0) = (0,0)\n";
    std::cout << "# the result covers this bounded space only\n";
    std::cout << "engine: " << to_string(spec.engine) << "\n";
    std::cout << "symmetry: " << (spec.symmetry ? "on" : "off") << "\n";
    std::cout << "configs_enumerated: " << report.configs_enumerated.str() << "\n";
    std::cout << "nodes_visited: " << report.nodes_visited << "\n";
    std::cout << "leaves_reached: " << report.leaves_reached << "\n";
    std::cout << "symmetry_skipped: " << report.symmetry_skipped << "\n";
    std::cout << "valid_found: " << report.valid_found << "\n";
    for (const auto& [w, count] : report.witness_histogram) {
      std::cout << "witness " << to_string(w) << ": " << count.str() << "\n";
    }
    if (verified) {
      std::cout << "witnesses_verified: " << (*verified ? "true" : "false") << " (" << report.witnesses.size()
                << " records)\n";
    }
  }
  std::cerr << "wall time: " << report.wall_seconds << " s\n";
  return report.valid_found == 0 ? 0 : 2;
}

int cmd_analyze(const std::string& path, Adjacency mode, bool as_json) {
  const std::string text = read_file(path);
  std::optional<EdgeLabeling> labels;
  EdgeColoring ec;
  json j;
  if (looks_like_config(text)) {
    labels = edge_labels(normalize(parse_config(text)));
    const ColoringResult colored = color_edges(*labels);
    if (!colored.coloring) {
      if (as_json) {
        j["off_axes_edges"] = json::array();
        for (const auto& e : colored.off_axes) {
          j["off_axes_edges"].push_back({{"edge", to_string(e.edge)}, {"value", vec_json(e.value)}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "off-axes edges: " << colored.off_axes.size() << "\n";
        for (const auto& e : colored.off_axes) std::cout << to_string(e.edge) << " " << to_string(e.value) << "\n";
      }
      return 0;
    }
    ec = *colored.coloring;
  } else {
    ec = parse_coloring(text);
  }

  const SquareClassification sc = square_colors(ec);
  if (!sc.valid()) {
    if (as_json) {
      j["square_violations"] = json::array();
      for (const auto& v : sc.violations) {
        j["square_violations"].push_back({{"square", {v.square.i, v.square.j}}, {"rule", v.rule}});
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "square violations: " << sc.violations.size() << "\n";
      for (const auto& v : sc.violations) std::cout << to_string(v.square) << " " << v.rule << "\n";
    }
    return 0;
  }

  const auto comps = components(ec.n, sc.squares, mode);
  j["n"] = ec.n;
  j["mode"] = to_string(mode);
  j["components"] = json::array();
  if (!as_json) {
    std::cout << "n: " << ec.n << "  mode: " << to_string(mode) << "  components: " << comps.size() << "\n";
    std::cout << "id  color  squares  rank  basis  boundary\n";
  }
  for (std::size_t id = 0; id < comps.size(); ++id) {
    const auto& c = comps[id];
    const LatticeSpan span = pi1_image(c);
    const auto curves = boundary_curves(c);
    json row;
    row["component_id"] = id;
    row["color"] = to_string(c.color);
    row["squares"] = c.squares.size();
    row["pi1"] = span_json(span);
    row["pieces"] = edge_connected_pieces(c).size();
    row["boundary"] = json::array();
    std::string boundary_text;
    for (const auto& curve : curves) {
      json cj;
      cj["curve"] = to_string(curve);
      cj["class"] = vec_json(homotopy_class(curve));
      if (labels) cj["gain"] = vec_json(curve_gain(curve, *labels));
      row["boundary"].push_back(cj);
      boundary_text += " " + to_string(homotopy_class(curve));
    }
    j["components"].push_back(row);
    if (!as_json) {
      std::cout << id << "  " << to_string(c.color) << "  " << c.squares.size() << "  " << span.rank << " ";
      for (auto v : span.basis) std::cout << " " << to_string(v);
      std::cout << "  " << curves.size() << " curve(s), classes" << (boundary_text.empty() ? " -" : boundary_text)
                << "\n";
    }
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_render(const std::string& path, const std::string& out, int cell_px, const std::string& show) {
  const RenderSpec spec = parse_show_flags(show, cell_px);
  if (spec.cell_px < 4) throw Error("cell_px too small");
  const std::string text = read_file(path);
  const std::string svg =
      looks_like_config(text) ? render_config(parse_config(text), spec) : render_coloring(parse_coloring(text), spec);
  if (out == "-") {
    std::cout << svg;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw Error("cannot write " + out);
    file << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-square tilings of the torus: difference sets, cocycles, components, bounded search"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");

  std::string input;
  bool print_set = false;
  auto* check = app.add_subcommand("check", "Analyze a tiling config");
  check->add_option("config", input, "Config file")->required();
  check->add_flag("--set", print_set, "Also list the difference set");
  check->add_flag("--json", as_json, "Structured output");

  std::optional<int> disc_n;
  bool reduce = false;
  auto* disc = app.add_subcommand("discretize", "Discretize a box-union compact set");
  disc->add_option("boxes", input, "Box-union file")->required();
  disc->add_option("--n", disc_n, "Grid resolution (default: the minimal safe one)")->check(CLI::PositiveNumber);
  disc->add_flag("--reduce", reduce, "Print a one-cell-per-residue config");
  disc->add_flag("--json", as_json, "Structured output");

  SearchSpec spec;
  std::string engine = "pruned";
  std::string dump_prefix = "valid_config_";
  auto* search = app.add_subcommand("search", "Bounded exhaustive search for an axes-only config");
  search->add_option("--n", spec.n, "Grid resolution")->required()->check(CLI::PositiveNumber);
  search->add_option("--bound", spec.bound, "Max |u|_inf of any translate")->required()->check(CLI::NonNegativeNumber);
  search->add_option("--engine", engine, "plain or pruned")->check(CLI::IsMember({"plain", "pruned"}));
  search->add_option("--budget", spec.budget, "Node budget");
  search->add_flag("--witnesses", spec.retain_witnesses, "Retain and replay witnesses");
  search->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--symmetry", spec.symmetry, "Skip leaves that are transposes of earlier ones");
  search->add_option("--dump-prefix", dump_prefix, "Path prefix for valid configs");
  search->add_flag("--json", as_json, "Structured output");

  std::string mode = "corner";
  auto* analyze = app.add_subcommand("analyze", "Components of a coloring (or of a config's coloring)");
  analyze->add_option("file", input, "Coloring or config file")->required();
  analyze->add_option("--mode", mode, "corner or edge")->check(CLI::IsMember({"corner", "edge"}));
  analyze->add_flag("--json", as_json, "Structured output");

  std::string out = "-";
  int cell_px = 48;
  std::string show = "edges,colors,components";
  auto* render = app.add_subcommand("render", "Render a coloring or config as SVG");
  render->add_option("file", input, "Coloring or config file")->required();
  render->add_option("--out", out, "Output path ('-' for stdout)");
  render->add_option("--cell-px", cell_px, "Pixels per grid cell (>= 4)");
  render->add_option("--show", show, "Comma list of edges,colors,components,gains,labels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(input, as_json, print_set);
    if (*disc) return cmd_discretize(input, disc_n, reduce, as_json);
    if (*search) {
      spec.engine = engine == "plain" ? Engine::plain : Engine::pruned;
      return cmd_search(spec, as_json, dump_prefix);
    }
    if (*analyze) return cmd_analyze(input, mode == "edge" ? Adjacency::edge : Adjacency::corner, as_json);
    if (*render) return cmd_render(input, out, cell_px, show);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
