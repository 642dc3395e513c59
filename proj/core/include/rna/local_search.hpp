#pragma once

#include <cstdint>

#include "rna/graph.hpp"
#include "rna/solve_report.hpp"

namespace rna {

struct LocalSearchOptions {
  std::uint64_t seed = 0;

  /// Independent random starts. On cycle-power-tagged graphs the contiguous
  /// coloring is always tried as one extra start.
  int restarts = 16;

  /// Improving swaps allowed per start; 0 means n*n.
  int max_passes = 0;

  /// Worker threads over restarts; the report is identical for every count.
  int jobs = 1;
};

/// Balanced local search: from each start, repeatedly applies the best
/// cut-reducing swap of a class-1/class-2 vertex pair until no swap
/// improves, and keeps the best result over all starts (ties broken by
/// lexicographically smaller witness). The value is an upper bound on the
/// minimum bisection width; identical inputs give identical reports.
SolveReport local_search_rna(const Graph& g, const LocalSearchOptions& opts = {});

}  // namespace rna
