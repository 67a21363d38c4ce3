#include "sqtile/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <tuple>

namespace sqtile {

namespace {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

LatticeSpan hermite_span(std::span<const LatticeVec> generators) {
  // Invariant: the generated group equals <(a, b), (0, c)> plus the
  // generators not yet folded in. Each fold is a unimodular change of basis.
  std::int64_t a = 0, b = 0, c = 0;
  for (const LatticeVec v : generators) {
    if (v.x == 0) {
      c = std::gcd(c, std::abs(v.y));
    } else if (a == 0) {
      a = v.x;
      b = v.y;
      if (a < 0) {
        a = -a;
        b = -b;
      }
    } else {
      const auto [g, s, t] = extended_gcd(a, v.x);
      const std::int64_t eliminated = (v.x / g) * b - (a / g) * v.y;
      c = std::gcd(c, std::abs(eliminated));
      b = s * b + t * v.y;
      a = g;
    }
    if (c > 0) b = floor_mod(b, c);
  }

  LatticeSpan out;
  if (a > 0) out.basis.push_back({a, b});
  if (c > 0) out.basis.push_back({0, c});
  out.rank = static_cast<int>(out.basis.size());
  if (out.rank == 2) out.index = a * c;
  return out;
}

std::string to_string(const LatticeSpan& span) {
  std::string s = "rank " + std::to_string(span.rank) + ", index ";
  s += span.index ? std::to_string(*span.index) : std::string("inf");
  s += ", basis";
  for (auto v : span.basis) s += " " + to_string(v);
  return s;
}

}  // namespace sqtile
