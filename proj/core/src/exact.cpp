#include "rna/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rna/errors.hpp"
#include "rna/local_search.hpp"

namespace rna {

namespace {

constexpr int brute_guard_default = 30;
constexpr int bnb_guard_default = 40;

void check_guard(const Graph& g, int guard_n, int fallback, const char* what) {
  const int guard = guard_n > 0 ? guard_n : fallback;
  if (g.vertex_count() > guard) {
    throw guard_error(std::string(what) + ": n=" +
                      std::to_string(g.vertex_count()) + " exceeds the size guard " +
                      std::to_string(guard) + " (override to raise it)");
  }
}

std::string to_witness(const std::vector<std::uint8_t>& color) {
  std::string s(color.size(), '1');
  for (size_t i = 0; i < color.size(); ++i) s[i] = static_cast<char>('0' + color[i]);
  return s;
}

// "1111...2222" — always balanced, always available as a last-resort
// incumbent; on cycle powers it is exactly the contiguous coloring.
std::pair<int, std::string> prefix_incumbent(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint8_t> color(static_cast<size_t>(n), 2);
  for (int i = 0; i < (n + 1) / 2; ++i) color[i] = 1;
  const int cut = cut_size(g, Coloring(color));
  return {cut, to_witness(color)};
}

// How many of the leading free vertices are fixed per work unit when
// splitting the enumeration tree. Depends only on n so that brute-force
// node counts do not change with the worker count.
int partition_depth(int n) {
  if (n <= 12) return 0;
  return std::min(8, n - 12);
}

struct Prefix {
  std::vector<std::uint8_t> colors;  // vertices 1..depth
  int c1;
  int c2;
  int cut;
};

// State shared by all workers of one solve.
struct Shared {
  const Graph& g;
  int cap;                       // per-class ceiling ceil(n/2)
  std::uint64_t budget;          // 0 = unlimited
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::atomic<int> incumbent{INT_MAX};  // branch-and-bound prune bound
  std::mutex best_mutex;
  int best_value = INT_MAX;
  std::string best_witness;

  explicit Shared(const Graph& graph)
      : g(graph), cap((graph.vertex_count() + 1) / 2), budget(0) {}

  bool count_node() {
    const std::uint64_t seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget != 0 && seen > budget) {
      aborted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void offer(int value, const std::string& witness) {
    std::lock_guard<std::mutex> lock(best_mutex);
    if (value < best_value ||
        (value == best_value && witness < best_witness)) {
      best_value = value;
      best_witness = witness;
      incumbent.store(value, std::memory_order_relaxed);
    }
  }
};

// One worker's view of a depth-first enumeration of balanced colorings with
// vertex 0 pinned to color 1. `prune` enables incumbent-based pruning
// (branch-and-bound); without it every cap-feasible completion is visited.
struct Searcher {
  Shared& sh;
  bool prune;
  std::vector<std::uint8_t> color;
  int c1 = 0;
  int c2 = 0;
  int cut = 0;
  int local_best = INT_MAX;
  std::string local_witness;

  Searcher(Shared& shared, bool use_incumbent)
      : sh(shared), prune(use_incumbent),
        color(static_cast<size_t>(shared.g.vertex_count()), 0) {
    color[0] = 1;
    c1 = 1;
  }

  void load(const Prefix& p) {
    std::fill(color.begin() + 1, color.end(), 0);
    std::copy(p.colors.begin(), p.colors.end(), color.begin() + 1);
    c1 = 1 + p.c1;
    c2 = p.c2;
    cut = p.cut;
  }

  int assignment_delta(int v, std::uint8_t c) const {
    int delta = 0;
    for (int u : sh.g.neighbors(v)) {
      if (u >= v) break;  // only smaller indices are assigned
      if (color[u] != c) ++delta;
    }
    return delta;
  }

  void dfs(int v) {
    if (sh.aborted.load(std::memory_order_relaxed)) return;
    const int n = sh.g.vertex_count();
    if (v == n) {
      if (cut < local_best) {
        local_best = cut;
        local_witness = to_witness(color);
        if (prune) sh.offer(cut, local_witness);
      }
      return;
    }
    for (std::uint8_t c : {std::uint8_t{1}, std::uint8_t{2}}) {
      int& count = c == 1 ? c1 : c2;
      if (count >= sh.cap) continue;
      const int delta = assignment_delta(v, c);
      if (prune &&
          cut + delta >= sh.incumbent.load(std::memory_order_relaxed)) {
        continue;
      }
      if (!sh.count_node()) return;
      color[v] = c;
      ++count;
      cut += delta;
      dfs(v + 1);
      cut -= delta;
      --count;
      color[v] = 0;
    }
  }
};

// Enumerates the work units: all cap-feasible (and, when pruning, not yet
// prunable) assignments of vertices 1..depth. Nodes spent here are counted
// once, so the total over all workers matches a single-threaded run.
std::vector<Prefix> enumerate_prefixes(Shared& sh, int depth, bool prune) {
  std::vector<Prefix> prefixes;
  Searcher s(sh, prune);
  std::vector<std::uint8_t> stack;

  auto rec = [&](auto&& self, int v) -> void {
    if (sh.aborted.load(std::memory_order_relaxed)) return;
    if (v == depth + 1) {
      prefixes.push_back(Prefix{stack, s.c1 - 1, s.c2, s.cut});
      return;
    }
    for (std::uint8_t c : {std::uint8_t{1}, std::uint8_t{2}}) {
      int& count = c == 1 ? s.c1 : s.c2;
      if (count >= sh.cap) continue;
      const int delta = s.assignment_delta(v, c);
      if (prune &&
          s.cut + delta >= sh.incumbent.load(std::memory_order_relaxed)) {
        continue;
      }
      if (!sh.count_node()) return;
      s.color[v] = c;
      ++count;
      s.cut += delta;
      stack.push_back(c);
      self(self, v + 1);
      stack.pop_back();
      s.cut -= delta;
      --count;
      s.color[v] = 0;
    }
  };
  rec(rec, 1);
  return prefixes;
}

struct SearchOutcome {
  int value;
  std::string witness;
  bool aborted;
};

// Runs the partitioned search and merges worker results by (value, witness).
SearchOutcome run_search(Shared& sh, int jobs, bool prune, int depth) {
  std::vector<Prefix> prefixes = enumerate_prefixes(sh, depth, prune);

  jobs = std::max(1, jobs);
  const int workers =
      std::min(jobs, std::max(1, static_cast<int>(prefixes.size())));

  std::vector<std::pair<int, std::string>> results(
      workers, {INT_MAX, std::string()});
  auto work = [&](int w) {
    Searcher s(sh, prune);
    for (size_t i = w; i < prefixes.size(); i += workers) {
      if (sh.aborted.load(std::memory_order_relaxed)) break;
      s.load(prefixes[i]);
      s.dfs(depth + 1);
    }
    results[w] = {s.local_best, std::move(s.local_witness)};
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  SearchOutcome out{INT_MAX, std::string(), sh.aborted.load()};
  for (auto& [value, witness] : results) {
    if (value < out.value || (value == out.value && witness < out.witness)) {
      out.value = value;
      out.witness = std::move(witness);
    }
  }
  // Fold in the shared incumbent (heuristic seed or cross-worker winner).
  {
    std::lock_guard<std::mutex> lock(sh.best_mutex);
    if (sh.best_value < out.value ||
        (sh.best_value == out.value && !sh.best_witness.empty() &&
         sh.best_witness < out.witness)) {
      out.value = sh.best_value;
      out.witness = sh.best_witness;
    }
  }
  return out;
}

// Lexicographically first balanced coloring (vertex 0 colored 1) whose cut
// equals `target`. The caller guarantees one exists.
std::string reconstruct_witness(Shared& sh, int target) {
  Searcher s(sh, false);
  const int n = sh.g.vertex_count();
  std::string found;

  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) {
      found = to_witness(s.color);
      return true;
    }
    for (std::uint8_t c : {std::uint8_t{1}, std::uint8_t{2}}) {
      int& count = c == 1 ? s.c1 : s.c2;
      if (count >= sh.cap) continue;
      const int delta = s.assignment_delta(v, c);
      if (s.cut + delta > target) continue;
      sh.nodes.fetch_add(1, std::memory_order_relaxed);
      s.color[v] = c;
      ++count;
      s.cut += delta;
      const bool done = self(self, v + 1);
      s.cut -= delta;
      --count;
      s.color[v] = 0;
      if (done) return true;
    }
    return false;
  };
  rec(rec, 1);
  return found;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

SolveReport brute_force_rna(const Graph& g, const ExactOptions& opts) {
  check_guard(g, opts.guard_n, brute_guard_default, "brute force");
  if (g.vertex_count() < 1) {
    throw std::invalid_argument("solver needs at least one vertex");
  }
  const auto start = std::chrono::steady_clock::now();

  Shared sh(g);
  sh.budget = opts.node_budget;
  SearchOutcome out =
      run_search(sh, opts.jobs, false, partition_depth(g.vertex_count()));

  if (out.value == INT_MAX) {
    // Budget ran out before any coloring was completed; fall back to the
    // deterministic prefix coloring so the report invariants still hold.
    auto [cut, witness] = prefix_incumbent(g);
    out.value = cut;
    out.witness = std::move(witness);
  }

  SolveReport report;
  report.rna_value = out.value;
  report.witness = Coloring::from_string(out.witness);
  report.nodes_explored = sh.nodes.load();
  report.elapsed_ms = elapsed_since(start);
  report.method = Method::brute_force;
  report.optimal = !out.aborted;
  return report;
}

SolveReport branch_and_bound_rna(const Graph& g, const ExactOptions& opts) {
  check_guard(g, opts.guard_n, bnb_guard_default, "branch and bound");
  if (g.vertex_count() < 1) {
    throw std::invalid_argument("solver needs at least one vertex");
  }
  const auto start = std::chrono::steady_clock::now();

  Shared sh(g);
  sh.budget = opts.node_budget;

  auto [prefix_cut, prefix_witness] = prefix_incumbent(g);
  sh.offer(prefix_cut, prefix_witness);
  if (opts.heuristic_incumbent && g.vertex_count() >= 2) {
    LocalSearchOptions warm;
    warm.restarts = 4;
    warm.jobs = 1;
    const SolveReport h = local_search_rna(g, warm);
    sh.offer(h.rna_value, h.witness.to_string());
  }

  SearchOutcome out =
      run_search(sh, opts.jobs, true, partition_depth(g.vertex_count()));

  SolveReport report;
  report.method = Method::branch_and_bound;
  report.rna_value = out.value;
  if (out.aborted) {
    report.witness = Coloring::from_string(out.witness);
    report.optimal = false;
  } else {
    // The pruned search proves the value; recover the lexicographically
    // smallest witness with a second bounded pass (worker-count independent).
    report.witness = Coloring::from_string(reconstruct_witness(sh, out.value));
    report.optimal = true;
  }
  report.nodes_explored = sh.nodes.load();
  report.elapsed_ms = elapsed_since(start);
  return report;
}

}  // namespace rna
