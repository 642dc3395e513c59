#pragma once

// Shared test utilities: random instances and small independent oracles
// that the real solvers are checked against.

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rna/coloring.hpp"
#include "rna/graph.hpp"

namespace testutil {

inline bool is_connected(const rna::Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

inline rna::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<rna::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return rna::Graph(n, std::move(edges));
}

inline rna::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    rna::Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

inline rna::Coloring random_balanced_coloring(int n, std::mt19937_64& rng) {
  int ones = n / 2;
  if (n % 2 == 1 && (rng() & 1)) ++ones;
  std::vector<std::uint8_t> f(static_cast<size_t>(n), 2);
  std::fill(f.begin(), f.begin() + ones, 1);
  std::shuffle(f.begin(), f.end(), rng);
  return rna::Coloring(std::move(f));
}

inline rna::VertexLabeling random_labeling(int n, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  return rna::VertexLabeling(std::move(labels));
}

// Minimum cut over all balanced colorings by direct bitmask enumeration.
// Independent of the solver's symmetry reduction and incremental counting.
inline int oracle_min_cut(const rna::Graph& g) {
  const int n = g.vertex_count();
  int best = INT_MAX;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int twos = __builtin_popcount(mask);
    if (std::abs(n - 2 * twos) > 1) continue;
    int cut = 0;
    for (const rna::Edge& e : g.edges()) {
      cut += ((mask >> e.u) ^ (mask >> e.v)) & 1u;
    }
    best = std::min(best, cut);
  }
  return best;
}

// Lexicographically smallest optimal balanced coloring with vertex 0
// colored 1, as a string — the tie-break contract the solvers promise.
inline std::string oracle_lex_witness(const rna::Graph& g) {
  const int n = g.vertex_count();
  const int best = oracle_min_cut(g);
  std::string smallest;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (mask & 1u) continue;  // vertex 0 must be color 1
    const int twos = __builtin_popcount(mask);
    if (std::abs(n - 2 * twos) > 1) continue;
    int cut = 0;
    for (const rna::Edge& e : g.edges()) {
      cut += ((mask >> e.u) ^ (mask >> e.v)) & 1u;
    }
    if (cut != best) continue;
    std::string s(static_cast<size_t>(n), '1');
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) s[v] = '2';
    }
    if (smallest.empty() || s < smallest) smallest = std::move(s);
  }
  return smallest;
}

// Minimum negative-edge count over all vertex labelings 1..n, where an edge
// is negative iff its endpoints' labels differ in parity. This is the
// definition the balanced-coloring minimum must agree with.
inline int oracle_labeling_min(const rna::Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  int best = INT_MAX;
  do {
    int negatives = 0;
    for (const rna::Edge& e : g.edges()) {
      negatives += (perm[e.u] ^ perm[e.v]) & 1;
    }
    best = std::min(best, negatives);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace testutil
