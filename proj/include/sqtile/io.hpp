#pragma once

// Line-based text formats. '#' starts a comment; blank lines are ignored.
//
//   config:    n <N>, then N^2 lines  u <i> <j> <ux> <uy>
//   boxes:     box <x0> <y0> <x1> <y1>   (rationals as p/q or p)
//   coloring:  n <N>, then 2N^2 lines  h|v <i> <j> white|red|blue

#include <string>
#include <string_view>

#include "sqtile/complex.hpp"
#include "sqtile/core.hpp"

namespace sqtile {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

TileConfig parse_config(std::string_view text);
std::string emit_config(const TileConfig& config);

BoxUnion parse_boxes(std::string_view text);
std::string emit_boxes(const BoxUnion& k);

Rational parse_rational(const std::string& token);
std::string format_rational(const Rational& r);

EdgeColoring parse_coloring(std::string_view text);
std::string emit_coloring(const EdgeColoring& ec);

/// True when the first directive after `n` is a `u` line.
bool looks_like_config(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace sqtile
