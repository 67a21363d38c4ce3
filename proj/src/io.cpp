#include "sqtile/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace sqtile {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) throw ParseError(line, "expected integer, got '" + tok + "'");
  return v;
}

void expect_arity(const Line& l, std::size_t count) {
  if (l.tokens.size() != count) {
    throw ParseError(l.number, "'" + l.tokens[0] + "' expects " + std::to_string(count - 1) + " fields");
  }
}

int parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, "missing 'n <N>' header");
  const Line& h = lines.front();
  if (h.tokens[0] != "n") throw ParseError(h.number, "expected 'n <N>' header");
  expect_arity(h, 2);
  const auto n = parse_int(h.tokens[1], h.number);
  if (n < 1 || n > 4096) throw ParseError(h.number, "n out of range");
  return static_cast<int>(n);
}

int parse_index(const std::string& tok, int n, int line) {
  const auto v = parse_int(tok, line);
  if (v < 0 || v >= n) throw ParseError(line, "index " + tok + " outside [0," + std::to_string(n - 1) + "]");
  return static_cast<int>(v);
}

}  // namespace

TileConfig parse_config(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = parse_header(lines);
  TileConfig config = TileConfig::uniform(n);
  std::set<Cell> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != "u") throw ParseError(l.number, "unknown directive '" + l.tokens[0] + "'");
    expect_arity(l, 5);
    const int i = parse_index(l.tokens[1], n, l.number);
    const int j = parse_index(l.tokens[2], n, l.number);
    const LatticeVec u{parse_int(l.tokens[3], l.number), parse_int(l.tokens[4], l.number)};
    if (!seen.insert({i, j}).second) throw ParseError(l.number, "duplicate cell " + to_string(Cell{i, j}));
    config.at(i, j) = u;
  }
  if (seen.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ParseError(lines.back().number, "wrong cell count: expected " + std::to_string(n * n) + ", got " +
                                              std::to_string(seen.size()));
  }
  return config;
}

std::string emit_config(const TileConfig& config) {
  require_valid(config);
  std::string out = "n " + std::to_string(config.n) + "\n";
  for (int i = 0; i < config.n; ++i) {
    for (int j = 0; j < config.n; ++j) {
      const LatticeVec u = config.at(i, j);
      out += "u " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(u.x) + " " +
             std::to_string(u.y) + "\n";
    }
  }
  return out;
}

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  auto parse_big = [&](const std::string& s) {
    if (s.empty()) throw Error("bad rational '" + token + "'");
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) throw Error("bad rational '" + token + "'");
    for (; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') throw Error("bad rational '" + token + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_big(token));
  const BigInt num = parse_big(token.substr(0, slash));
  const BigInt den = parse_big(token.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + token + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BoxUnion parse_boxes(std::string_view text) {
  BoxUnion k;
  for (const Line& l : tokenize(text)) {
    if (l.tokens[0] != "box") throw ParseError(l.number, "unknown directive '" + l.tokens[0] + "'");
    expect_arity(l, 5);
    Box b;
    try {
      b = {parse_rational(l.tokens[1]), parse_rational(l.tokens[2]), parse_rational(l.tokens[3]),
           parse_rational(l.tokens[4])};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(l.number, e.what());
    }
    if (b.x0 > b.x1 || b.y0 > b.y1) throw ParseError(l.number, "box corners out of order");
    k.boxes.push_back(std::move(b));
  }
  if (k.boxes.empty()) throw ParseError(1, "no boxes");
  return k;
}

std::string emit_boxes(const BoxUnion& k) {
  std::string out;
  for (const auto& b : k.boxes) {
    out += "box " + format_rational(b.x0) + " " + format_rational(b.y0) + " " + format_rational(b.x1) + " " +
           format_rational(b.y1) + "\n";
  }
  return out;
}

EdgeColoring parse_coloring(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = parse_header(lines);
  EdgeColoring ec(n);
  std::set<EdgeRef> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    EdgeKind kind;
    if (l.tokens[0] == "h") kind = EdgeKind::h;
    else if (l.tokens[0] == "v") kind = EdgeKind::v;
    else throw ParseError(l.number, "unknown directive '" + l.tokens[0] + "'");
    expect_arity(l, 4);
    const EdgeRef e{kind, parse_index(l.tokens[1], n, l.number), parse_index(l.tokens[2], n, l.number)};
    const auto color = parse_color(l.tokens[3]);
    if (!color) throw ParseError(l.number, "unknown color '" + l.tokens[3] + "'");
    if (!seen.insert(e).second) throw ParseError(l.number, "duplicate edge " + to_string(e));
    ec.at(e) = *color;
  }
  if (seen.size() != 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ParseError(lines.back().number, "wrong edge count: expected " + std::to_string(2 * n * n) + ", got " +
                                              std::to_string(seen.size()));
  }
  return ec;
}

std::string emit_coloring(const EdgeColoring& ec) {
  std::string out = "n " + std::to_string(ec.n) + "\n";
  for (EdgeKind kind : {EdgeKind::h, EdgeKind::v}) {
    for (int i = 0; i < ec.n; ++i) {
      for (int j = 0; j < ec.n; ++j) {
        const EdgeRef e{kind, i, j};
        out += std::string(kind == EdgeKind::h ? "h " : "v ") + std::to_string(i) + " " + std::to_string(j) + " " +
               to_string(ec.at(e)) + "\n";
      }
    }
  }
  return out;
}

bool looks_like_config(std::string_view text) {
  const auto lines = tokenize(text);
  return lines.size() > 1 && lines[1].tokens[0] == "u";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sqtile
