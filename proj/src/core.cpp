#include "sqtile/core.hpp"

#include <tuple>

namespace sqtile {

std::string to_string(LatticeVec v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string to_string(Cell c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

TileConfig TileConfig::uniform(int n, LatticeVec u) {
  TileConfig c;
  c.n = n;
  if (n > 0) c.translates.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), u);
  return c;
}

std::vector<Violation> validate(const TileConfig& config) {
  std::vector<Violation> out;
  if (config.n <= 0) {
    out.push_back({"non-positive n", "n = " + std::to_string(config.n)});
    return out;
  }
  const auto expected = static_cast<std::size_t>(config.n) * static_cast<std::size_t>(config.n);
  if (config.translates.size() != expected) {
    out.push_back({"wrong cell count", "expected " + std::to_string(expected) + " translates, got " +
                                           std::to_string(config.translates.size())});
  }
  return out;
}

void require_valid(const TileConfig& config) {
  auto violations = validate(config);
  if (!violations.empty()) throw Error(violations.front().code + ": " + violations.front().detail);
}

TileConfig translated(const TileConfig& config, LatticeVec shift) {
  TileConfig out = config;
  for (auto& u : out.translates) u += shift;
  return out;
}

TileConfig normalize(const TileConfig& config) {
  require_valid(config);
  return translated(config, -config.translates.front());
}

bool is_normalized(const TileConfig& config) {
  return !config.translates.empty() && config.translates.front().is_zero();
}

BigInt floor(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil(const Rational& r) { return -floor(Rational(-r)); }

bool operator<(const Box& a, const Box& b) {
  return std::tie(a.x0, a.y0, a.x1, a.y1) < std::tie(b.x0, b.y0, b.x1, b.y1);
}

void require_valid(const BoxUnion& k) {
  if (k.boxes.empty()) throw Error("empty box union");
  for (const auto& b : k.boxes) {
    if (b.x0 > b.x1 || b.y0 > b.y1) throw Error("inverted box corners");
  }
}

}  // namespace sqtile
