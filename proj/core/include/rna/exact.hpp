#pragma once

#include <cstdint>

#include "rna/graph.hpp"
#include "rna/solve_report.hpp"

namespace rna {

struct ExactOptions {
  /// Largest vertex count the solver accepts; 0 picks the method default
  /// (30 for brute force, 40 for branch-and-bound). Raising it is a
  /// deliberate act: enumeration cost grows as C(n-1, n/2).
  int guard_n = 0;

  /// Branch-and-bound stops after roughly this many search nodes and
  /// reports the best incumbent, flagged non-optimal. 0 means unlimited.
  std::uint64_t node_budget = 0;

  /// Worker threads. The reported value and witness are identical for
  /// every job count; nodes_explored of branch-and-bound may vary with
  /// jobs > 1 because pruning depends on incumbent propagation timing.
  int jobs = 1;

  /// Seed branch-and-bound's incumbent with a short local-search run
  /// (which itself warm-starts from the contiguous coloring on
  /// cycle-power-tagged graphs).
  bool heuristic_incumbent = true;
};

/// Exact minimum over all balanced colorings, by exhaustive enumeration
/// with vertex 0 pinned to color 1. Witness: the lexicographically
/// smallest optimal coloring with vertex 0 colored 1.
/// Throws guard_error when g has more than guard_n vertices.
SolveReport brute_force_rna(const Graph& g, const ExactOptions& opts = {});

/// Same minimum and witness as brute_force_rna, computed with incumbent
/// pruning. With a node budget the report may instead carry the best
/// incumbent found, flagged non-optimal.
SolveReport branch_and_bound_rna(const Graph& g, const ExactOptions& opts = {});

}  // namespace rna
