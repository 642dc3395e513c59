#include "rna/local_search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rna/bounds.hpp"
#include "rna/coloring.hpp"

namespace rna {

namespace {

struct StartResult {
  int value = 0;
  std::string witness;
  std::uint64_t scans = 0;
};

int raw_cut(const Graph& g, const std::vector<std::uint8_t>& f) {
  int cut = 0;
  for (const Edge& e : g.edges()) {
    if (f[e.u] != f[e.v]) ++cut;
  }
  return cut;
}

std::vector<std::uint8_t> random_balanced(int n, std::mt19937_64& rng) {
  int ones = n / 2;
  if (n % 2 == 1 && (rng() & 1)) ++ones;  // odd n: pick either legal split
  std::vector<std::uint8_t> f(static_cast<size_t>(n), 2);
  std::fill(f.begin(), f.begin() + ones, 1);
  std::shuffle(f.begin(), f.end(), rng);
  return f;
}

// Greedy descent: per scan, the best-gain swap of one vertex from each
// class; ties go to the smallest (u, v). Gain of swapping u and v is
// D(u) + D(v) - 2[uv is an edge] with D(x) = external - internal degree.
StartResult polish(const Graph& g, std::vector<std::uint8_t> f,
                   std::int64_t max_swaps) {
  const int n = g.vertex_count();
  int cut = raw_cut(g, f);
  std::vector<int> d(static_cast<size_t>(n));
  std::vector<int> ones, twos;
  StartResult result;

  for (std::int64_t swap = 0; swap < max_swaps; ++swap) {
    ++result.scans;
    std::fill(d.begin(), d.end(), 0);
    for (const Edge& e : g.edges()) {
      const int delta = f[e.u] == f[e.v] ? -1 : 1;
      d[e.u] += delta;
      d[e.v] += delta;
    }
    ones.clear();
    twos.clear();
    for (int v = 0; v < n; ++v) (f[v] == 1 ? ones : twos).push_back(v);

    int best_gain = 0, best_u = -1, best_v = -1;
    for (int u : ones) {
      for (int v : twos) {
        const int gain = d[u] + d[v] - 2 * (g.has_edge(u, v) ? 1 : 0);
        if (gain > best_gain) {
          best_gain = gain;
          best_u = u;
          best_v = v;
        }
      }
    }
    if (best_gain <= 0) break;
    f[best_u] = 2;
    f[best_v] = 1;
    cut -= best_gain;
  }

  if (f[0] == 2) {
    for (auto& c : f) c = c == 1 ? 2 : 1;
  }
  result.value = cut;
  result.witness.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) result.witness[v] = static_cast<char>('0' + f[v]);
  return result;
}

}  // namespace

SolveReport local_search_rna(const Graph& g, const LocalSearchOptions& opts) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument("local search needs at least two vertices");
  }
  if (opts.restarts < 0) {
    throw std::invalid_argument("restarts must be non-negative");
  }
  if (opts.max_passes < 0) {
    throw std::invalid_argument("max_passes must be non-negative");
  }
  const auto start_time = std::chrono::steady_clock::now();

  const FamilyTag& tag = g.family();
  const bool warm = tag.is_cycle_power() && tag.d >= 2;
  const int starts = opts.restarts + (warm ? 1 : 0);
  if (starts == 0) {
    throw std::invalid_argument("no starts: zero restarts and no warm start");
  }
  const std::int64_t max_swaps =
      opts.max_passes > 0 ? opts.max_passes
                          : static_cast<std::int64_t>(n) * n;

  auto run_start = [&](int index) -> StartResult {
    if (warm && index == opts.restarts) {
      const Coloring c = contiguous_coloring(tag.n, tag.d);
      return polish(g, {c.colors().begin(), c.colors().end()}, max_swaps);
    }
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed),
                      static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    return polish(g, random_balanced(n, rng), max_swaps);
  };

  const int workers = std::max(1, std::min(opts.jobs, starts));
  std::vector<StartResult> best_per_worker(static_cast<size_t>(workers));
  std::vector<std::uint64_t> scans_per_worker(static_cast<size_t>(workers), 0);

  auto work = [&](int w) {
    StartResult best;
    best.value = -1;
    for (int i = w; i < starts; i += workers) {
      StartResult r = run_start(i);
      scans_per_worker[w] += r.scans;
      if (best.value < 0 || r.value < best.value ||
          (r.value == best.value && r.witness < best.witness)) {
        best.value = r.value;
        best.witness = std::move(r.witness);
      }
    }
    best_per_worker[w] = std::move(best);
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  StartResult merged;
  merged.value = -1;
  std::uint64_t total_scans = 0;
  for (int w = 0; w < workers; ++w) {
    total_scans += scans_per_worker[w];
    const StartResult& r = best_per_worker[w];
    if (r.witness.empty()) continue;
    if (merged.value < 0 || r.value < merged.value ||
        (r.value == merged.value && r.witness < merged.witness)) {
      merged.value = r.value;
      merged.witness = r.witness;
    }
  }

  SolveReport report;
  report.rna_value = merged.value;
  report.witness = Coloring::from_string(merged.witness);
  report.nodes_explored = total_scans;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start_time)
                          .count();
  report.method = Method::heuristic;
  report.optimal = false;
  return report;
}

}  // namespace rna
