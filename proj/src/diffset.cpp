#include "sqtile/diffset.hpp"

#include <algorithm>

namespace sqtile {

DiffSet::DiffSet(std::vector<LatticeVec> vectors) : vectors_(std::move(vectors)) {
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool DiffSet::contains(LatticeVec v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

bool DiffSet::is_symmetric() const {
  return std::all_of(vectors_.begin(), vectors_.end(), [&](LatticeVec v) { return contains(-v); });
}

std::vector<DiffWitness> DiffSet::witnesses(LatticeVec v) const {
  auto it = provenance_.find(v);
  return it == provenance_.end() ? std::vector<DiffWitness>{} : it->second;
}

void DiffSet::set_provenance(std::map<LatticeVec, std::vector<DiffWitness>> provenance) {
  provenance_ = std::move(provenance);
}

std::vector<int> admissible_shifts(int n, int delta) {
  std::vector<int> out;
  for (int m = -1; m <= 1; ++m) {
    const int gap = delta - m * n;
    if (gap >= -1 && gap <= 1) out.push_back(m);
  }
  return out;
}

DiffSet difference_set(const TileConfig& config, bool with_provenance) {
  require_valid(config);
  const int n = config.n;
  std::vector<LatticeVec> out;
  std::map<LatticeVec, std::vector<DiffWitness>> provenance;

  // Shifts depend only on the index offset, so tabulate them once.
  std::vector<std::vector<int>> shifts(static_cast<std::size_t>(2 * n - 1));
  for (int delta = -(n - 1); delta <= n - 1; ++delta) shifts[delta + n - 1] = admissible_shifts(n, delta);

  for (int pi = 0; pi < n; ++pi) {
    for (int pj = 0; pj < n; ++pj) {
      for (int qi = 0; qi < n; ++qi) {
        const auto& mx_list = shifts[pi - qi + n - 1];
        if (mx_list.empty()) continue;
        for (int qj = 0; qj < n; ++qj) {
          const auto& my_list = shifts[pj - qj + n - 1];
          if (my_list.empty()) continue;
          const LatticeVec d = config.at(pi, pj) - config.at(qi, qj);
          for (int mx : mx_list) {
            for (int my : my_list) {
              const LatticeVec m{mx, my};
              out.push_back(d + m);
              if (with_provenance) provenance[d + m].push_back({{pi, pj}, {qi, qj}, m});
            }
          }
        }
      }
    }
  }
  DiffSet result(std::move(out));
  if (with_provenance) result.set_provenance(std::move(provenance));
  return result;
}

DiffSet geometric_difference_set(const TileConfig& config) {
  require_valid(config);
  const int n = config.n;
  std::vector<LatticeVec> out;
  for (int pi = 0; pi < n; ++pi) {
    for (int pj = 0; pj < n; ++pj) {
      for (int qi = 0; qi < n; ++qi) {
        for (int qj = 0; qj < n; ++qj) {
          const LatticeVec up = config.at(pi, pj);
          const LatticeVec uq = config.at(qi, qj);
          // (B_p + u_p) - (B_q + u_q), as a closed rational box.
          const Rational x0 = Rational(pi, n) + up.x - Rational(qi + 1, n) - uq.x;
          const Rational x1 = Rational(pi + 1, n) + up.x - Rational(qi, n) - uq.x;
          const Rational y0 = Rational(pj, n) + up.y - Rational(qj + 1, n) - uq.y;
          const Rational y1 = Rational(pj + 1, n) + up.y - Rational(qj, n) - uq.y;
          const auto xs = ceil(x0), xe = floor(x1);
          const auto ys = ceil(y0), ye = floor(y1);
          for (BigInt x = xs; x <= xe; ++x) {
            for (BigInt y = ys; y <= ye; ++y) {
              out.push_back({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
            }
          }
        }
      }
    }
  }
  return DiffSet(std::move(out));
}

AxesVerdict axes_subset(const DiffSet& d) {
  AxesVerdict verdict;
  for (const LatticeVec v : d.vectors()) {
    if (!v.on_axes()) {
      verdict.on_axes = false;
      verdict.witness = v;
      verdict.witness_pairs = d.witnesses(v);
      break;
    }
  }
  return verdict;
}

}  // namespace sqtile
