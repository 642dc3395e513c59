#pragma once

#include <cstdint>
#include <string_view>

#include "rna/coloring.hpp"

namespace rna {

enum class Method { brute_force, branch_and_bound, heuristic };

/// CLI and JSON name of a method: "brute", "bnb", "heuristic".
std::string_view method_name(Method m);

/// Result of one solver run. The witness is always balanced and its
/// recomputed cut equals rna_value; `optimal` is false only when a node
/// budget stopped branch-and-bound before the search space was exhausted.
struct SolveReport {
  int rna_value = 0;
  Coloring witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0.0;
  Method method = Method::brute_force;
  bool optimal = true;
};

}  // namespace rna
