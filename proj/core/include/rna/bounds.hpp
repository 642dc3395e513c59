#pragma once

#include <cstdint>
#include <vector>

#include "rna/coloring.hpp"
#include "rna/graph.hpp"

namespace rna {

/// Two-arc coloring of the cycle power C_n^d: vertices 0..floor(n/2)-1 get
/// color 1, the rest color 2. Balanced, and its cut on C_n^d has exactly
/// d(d+1) edges (each of the two arc boundaries is crossed by 1+2+...+d
/// edges). Requires d >= 2 and n >= 2d+1.
Coloring contiguous_coloring(int n, int d);

/// Closed form d(d+1) for the minimum bisection width of C_n^d, d >= 2.
int theorem_value(int d);

/// Universal upper bound floor((2m + n) / 4) for any graph.
std::int64_t kang_bound(const Graph& g);

struct SkaBounds {
  int lower;
  int upper;
};

/// The sandwich bounds (2d, d(d+1)) for cycle powers, d >= 2.
SkaBounds ska_bounds(int d);

/// Outcome of deleting a pivot vertex from C_n^d and patching the hole:
/// h is C_{n-1}^d after relabeling, f_prime the surviving coloring, and
/// cut_after <= cut_before always holds.
struct ReductionResult {
  Graph h;
  Coloring f_prime;
  std::vector<Edge> added_edges;  // the d patch edges, in h's indexing
  int cut_before = 0;
  int cut_after = 0;
  int rotation = 0;  // index shift applied so the pivot became vertex 0
};

/// Reduces (C_n^d, f) to (C_{n-1}^d, f'): rotates indices so the pivot is
/// vertex 0, removes it together with its incident edges, adds the d edges
/// joining the pairs at cycle distance d+1 across the hole, and shifts the
/// remaining indices down by one.
///
/// Requires n >= 2d+2, d >= 2, f balanced, and the pivot's class to have
/// size >= ceil(n/2) (otherwise f' would be unbalanced); violations throw
/// std::invalid_argument.
ReductionResult reduce_cycle_power(int n, int d, const Coloring& f, int pivot);

}  // namespace rna
