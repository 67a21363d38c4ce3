#include "sqtile/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "sqtile/diffset.hpp"

namespace sqtile {

namespace {

std::vector<LatticeVec> translate_values(int bound) {
  std::vector<LatticeVec> values;
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) values.push_back({x, y});
  }
  return values;
}

BigInt power(std::size_t base, std::size_t exp) {
  BigInt r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

// Counters for one independent subtree; merged by addition.
struct Partial {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t skipped = 0;
  std::uint64_t valid = 0;
  std::map<LatticeVec, std::uint64_t> leaf_witnesses;
  std::vector<std::uint64_t> pruned_at;  // indexed by position
  std::map<std::pair<std::size_t, LatticeVec>, std::uint64_t> pruned_witnesses;
  std::vector<TileConfig> valid_configs;
  std::vector<WitnessRecord> records;
};

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void add(std::uint64_t count) {
    if (used_.fetch_add(count) + count > limit_) throw Error("budget exceeded: more than " + std::to_string(limit_) + " nodes");
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Runs task(k) for k in [0, count) on `jobs` threads; results stay indexed by k.
template <typename Task>
std::vector<Partial> run_tasks(std::size_t count, unsigned jobs, Task task) {
  std::vector<Partial> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        results[k] = task(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

bool symmetry_redundant(const TileConfig& c) { return transpose(c) < c; }

void evaluate_leaf(const TileConfig& c, const SearchSpec& spec, Partial& out) {
  if (spec.symmetry && symmetry_redundant(c)) {
    ++out.skipped;
    return;
  }
  ++out.leaves;
  const AxesVerdict verdict = axes_subset(difference_set(c));
  if (verdict.on_axes) {
    ++out.valid;
    out.valid_configs.push_back(c);
    return;
  }
  ++out.leaf_witnesses[*verdict.witness];
  if (spec.retain_witnesses) out.records.push_back({c, *verdict.witness});
}

void require_searchable(const SearchSpec& spec) {
  if (spec.n < 1) throw Error("non-positive n");
  if (spec.bound < 0) throw Error("negative bound");
}

SearchReport merge(const SearchSpec& spec, std::vector<Partial>& parts, std::uint64_t extra_nodes) {
  const std::size_t cells = static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.n);
  const std::size_t values = translate_values(spec.bound).size();
  std::vector<BigInt> subtree(cells);
  for (std::size_t k = 0; k < cells; ++k) subtree[k] = power(values, cells - 1 - k);

  SearchReport report;
  report.spec = spec;
  report.nodes_visited = extra_nodes;
  for (auto& p : parts) {
    report.nodes_visited += p.nodes;
    report.leaves_reached += p.leaves;
    report.symmetry_skipped += p.skipped;
    report.valid_found += p.valid;
    report.configs_enumerated += p.leaves + p.skipped;
    for (std::size_t k = 0; k < p.pruned_at.size(); ++k) report.configs_enumerated += subtree[k] * p.pruned_at[k];
    for (const auto& [w, count] : p.leaf_witnesses) report.witness_histogram[w] += count;
    for (const auto& [key, count] : p.pruned_witnesses) report.witness_histogram[key.second] += subtree[key.first] * count;
    std::move(p.valid_configs.begin(), p.valid_configs.end(), std::back_inserter(report.valid_configs));
    std::move(p.records.begin(), p.records.end(), std::back_inserter(report.witnesses));
  }
  if (report.configs_enumerated != search_space_size(spec.n, spec.bound)) {
    throw std::logic_error("search did not account for every configuration");
  }
  return report;
}

// Depth-first placement in row-major cell order with pairwise pruning.
class PrunedSearch {
 public:
  explicit PrunedSearch(const SearchSpec& spec, NodeBudget& budget)
      : spec_(spec), n_(spec.n), cells_(static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.n)),
        values_(translate_values(spec.bound)), budget_(budget), config_(TileConfig::uniform(spec.n)),
        constraints_(cells_), self_witness_(cells_) {
    for (std::size_t p = 0; p < cells_; ++p) {
      const Cell cp = cell(p);
      for (std::size_t q = 0; q <= p; ++q) {
        const Cell cq = cell(q);
        const auto mx = admissible_shifts(n_, cp.i - cq.i);
        const auto my = admissible_shifts(n_, cp.j - cq.j);
        std::vector<LatticeVec> shifts;
        for (int x : mx) {
          for (int y : my) shifts.push_back({x, y});
        }
        if (shifts.empty()) continue;
        if (q == p) {
          // u_p - u_p = 0, so only the shift itself matters.
          for (const auto m : shifts) {
            if (!m.on_axes() && (!self_witness_[p] || m < *self_witness_[p])) self_witness_[p] = m;
          }
        } else {
          constraints_[p].push_back({q, std::move(shifts)});
        }
      }
    }
  }

  [[nodiscard]] std::optional<LatticeVec> root_violation() const { return self_witness_[0]; }
  [[nodiscard]] const std::vector<LatticeVec>& values() const { return values_; }

  Partial run_from(std::size_t first_value) {
    Partial out;
    out.pruned_at.assign(cells_, 0);
    place(1, values_[first_value], out);
    flush(out);
    return out;
  }

 private:
  struct Constraint {
    std::size_t other;
    std::vector<LatticeVec> shifts;
  };

  [[nodiscard]] Cell cell(std::size_t k) const { return {static_cast<int>(k) / n_, static_cast<int>(k) % n_}; }

  std::optional<LatticeVec> violation(std::size_t p) const {
    std::optional<LatticeVec> worst = self_witness_[p];
    const LatticeVec up = config_.translates[p];
    for (const auto& c : constraints_[p]) {
      const LatticeVec d = up - config_.translates[c.other];
      for (const auto m : c.shifts) {
        const LatticeVec w = d + m;
        if (!w.on_axes() && (!worst || w < *worst)) worst = w;
      }
    }
    return worst;
  }

  void place(std::size_t p, LatticeVec value, Partial& out) {
    ++out.nodes;
    if ((out.nodes & 0xFFF) == 0) flush(out);
    config_.translates[p] = value;
    if (const auto w = violation(p)) {
      ++out.pruned_at[p];
      ++out.pruned_witnesses[{p, *w}];
      if (spec_.retain_witnesses) {
        TileConfig rep = config_;
        std::fill(rep.translates.begin() + static_cast<std::ptrdiff_t>(p) + 1, rep.translates.end(), LatticeVec{});
        out.records.push_back({std::move(rep), *w});
      }
    } else if (p + 1 == cells_) {
      const std::uint64_t leaves_before = out.leaves, valid_before = out.valid;
      evaluate_leaf(config_, spec_, out);
      if (out.leaves != leaves_before && out.valid == valid_before) {
        throw std::logic_error("pruned survivor fails the full difference-set check");
      }
    } else {
      for (const auto v : values_) place(p + 1, v, out);
    }
    config_.translates[p] = {};
  }

  void flush(Partial& out) {
    budget_.add(out.nodes - flushed_);
    flushed_ = out.nodes;
  }

  const SearchSpec& spec_;
  int n_;
  std::size_t cells_;
  std::vector<LatticeVec> values_;
  NodeBudget& budget_;
  TileConfig config_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<std::optional<LatticeVec>> self_witness_;
  std::uint64_t flushed_ = 0;
};

}  // namespace

std::string to_string(Engine e) { return e == Engine::plain ? "plain" : "pruned"; }

BigInt search_space_size(int n, int bound) {
  return power(static_cast<std::size_t>(2 * bound + 1) * static_cast<std::size_t>(2 * bound + 1),
               static_cast<std::size_t>(n) * static_cast<std::size_t>(n) - 1);
}

SearchReport search_plain(const SearchSpec& spec) {
  require_searchable(spec);
  const auto start = std::chrono::steady_clock::now();
  const BigInt total = search_space_size(spec.n, spec.bound);
  if (total > spec.budget) {
    throw Error("budget exceeded: " + total.str() + " configs > budget " + std::to_string(spec.budget));
  }
  const std::vector<LatticeVec> values = translate_values(spec.bound);
  const std::size_t cells = static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.n);

  auto enumerate = [&](std::size_t first_value) {
    Partial out;
    TileConfig c = TileConfig::uniform(spec.n);
    if (cells == 1) {
      ++out.nodes;
      evaluate_leaf(c, spec, out);
      return out;
    }
    c.translates[1] = values[first_value];
    // Odometer over positions 2..cells-1.
    std::vector<std::size_t> digit(cells, 0);
    for (std::size_t p = 2; p < cells; ++p) c.translates[p] = values[0];
    while (true) {
      ++out.nodes;
      evaluate_leaf(c, spec, out);
      std::size_t p = cells - 1;
      while (p >= 2 && ++digit[p] == values.size()) {
        digit[p] = 0;
        c.translates[p] = values[0];
        --p;
      }
      if (p < 2) break;
      c.translates[p] = values[digit[p]];
    }
    return out;
  };

  auto parts = run_tasks(cells == 1 ? 1 : values.size(), spec.jobs, enumerate);
  SearchReport report = merge(spec, parts, 0);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SearchReport search_pruned(const SearchSpec& spec) {
  require_searchable(spec);
  const auto start = std::chrono::steady_clock::now();
  NodeBudget budget(spec.budget);
  const std::size_t cells = static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.n);

  std::vector<Partial> parts;
  PrunedSearch probe(spec, budget);
  if (const auto w = probe.root_violation()) {
    Partial root;
    root.pruned_at.assign(cells, 0);
    root.pruned_at[0] = 1;
    root.pruned_witnesses[{0, *w}] = 1;
    if (spec.retain_witnesses) root.records.push_back({TileConfig::uniform(spec.n), *w});
    parts.push_back(std::move(root));
  } else if (cells == 1) {
    Partial leaf;
    evaluate_leaf(TileConfig::uniform(spec.n), spec, leaf);
    parts.push_back(std::move(leaf));
  } else {
    parts = run_tasks(probe.values().size(), spec.jobs, [&](std::size_t k) {
      PrunedSearch engine(spec, budget);
      return engine.run_from(k);
    });
  }
  budget.add(1);
  SearchReport report = merge(spec, parts, 1);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SearchReport run_search(const SearchSpec& spec) {
  return spec.engine == Engine::plain ? search_plain(spec) : search_pruned(spec);
}

bool verify_witnesses(const SearchReport& report) {
  if (!report.spec.retain_witnesses) throw Error("witnesses not retained");
  for (const auto& record : report.witnesses) {
    const DiffSet d = geometric_difference_set(record.config);
    if (record.witness.on_axes() || !d.contains(record.witness)) {
      throw Error("stale witness " + to_string(record.witness));
    }
  }
  return true;
}

TileConfig transpose(const TileConfig& c) {
  require_valid(c);
  TileConfig out = TileConfig::uniform(c.n);
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) {
      const LatticeVec u = c.at(i, j);
      out.at(j, i) = {u.y, u.x};
    }
  }
  return normalize(out);
}

TileConfig reflect_x(const TileConfig& c) {
  require_valid(c);
  // B_{i,j} + u reflected in x = 0 is B_{n-1-i,j} + (-1 - u.x, u.y).
  TileConfig out = TileConfig::uniform(c.n);
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) {
      const LatticeVec u = c.at(i, j);
      out.at(c.n - 1 - i, j) = {-1 - u.x, u.y};
    }
  }
  return normalize(out);
}

TileConfig reflect_y(const TileConfig& c) {
  require_valid(c);
  TileConfig out = TileConfig::uniform(c.n);
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) {
      const LatticeVec u = c.at(i, j);
      out.at(i, c.n - 1 - j) = {u.x, -1 - u.y};
    }
  }
  return normalize(out);
}

TileConfig antitranspose(const TileConfig& c) { return reflect_x(reflect_y(transpose(c))); }

}  // namespace sqtile
