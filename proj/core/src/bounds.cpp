#include "rna/bounds.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace rna {

Coloring contiguous_coloring(int n, int d) {
  if (d < 2) {
    throw std::invalid_argument("contiguous coloring requires d >= 2, got d=" +
                                std::to_string(d));
  }
  if (n < 2 * d + 1) {
    throw std::invalid_argument("contiguous coloring requires n >= 2d+1, got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  }
  std::vector<std::uint8_t> colors(static_cast<size_t>(n), 2);
  for (int i = 0; i < n / 2; ++i) colors[i] = 1;
  return Coloring(std::move(colors));
}

int theorem_value(int d) {
  if (d < 2) {
    throw std::invalid_argument("closed form requires d >= 2, got d=" +
                                std::to_string(d));
  }
  return d * (d + 1);
}

std::int64_t kang_bound(const Graph& g) {
  const std::int64_t m = g.edge_count();
  const std::int64_t n = g.vertex_count();
  return (2 * m + n) / 4;
}

SkaBounds ska_bounds(int d) {
  if (d < 2) {
    throw std::invalid_argument("sandwich bounds require d >= 2, got d=" +
                                std::to_string(d));
  }
  return SkaBounds{2 * d, d * (d + 1)};
}

ReductionResult reduce_cycle_power(int n, int d, const Coloring& f, int pivot) {
  if (d < 2) {
    throw std::invalid_argument("reduction requires d >= 2, got d=" +
                                std::to_string(d));
  }
  if (n < 2 * d + 2) {
    throw std::invalid_argument("reduction requires n >= 2d+2, got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  }
  if (f.size() != n) {
    throw std::invalid_argument("coloring has " + std::to_string(f.size()) +
                                " entries, expected " + std::to_string(n));
  }
  if (!is_balanced(f)) {
    throw std::invalid_argument("coloring is not balanced");
  }
  if (pivot < 0 || pivot >= n) {
    throw std::invalid_argument("pivot " + std::to_string(pivot) +
                                " out of range for n=" + std::to_string(n));
  }
  if (f.count(f[pivot]) < (n + 1) / 2) {
    throw std::invalid_argument(
        "pivot " + std::to_string(pivot) +
        " belongs to the minority class; removing it would unbalance the coloring");
  }

  const Graph g = cycle_power(n, d);
  const int cut_before = cut_size(g, f);

  // Rotate so the pivot sits at index 0; rot(i) is position i after rotation.
  auto orig = [n, pivot](int i) { return (pivot + i) % n; };

  // Surviving edges: every (i, i+j mod n) pair of the cycle power names each
  // edge exactly once, so dropping the pairs that touch index 0 and shifting
  // the rest down by one (w_j = v_{j+1}) deletes the pivot's star.
  std::vector<Edge> h_edges;
  h_edges.reserve(static_cast<size_t>(n - 1) * d);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= d; ++j) {
      int k = (i + j) % n;
      if (k == 0) continue;
      h_edges.emplace_back(i - 1, k - 1);
    }
  }

  // The d patch edges: (v_{n-d+k}, v_{k+1}) for k = 0..d-1, i.e. the pairs
  // at cycle distance d+1 straddling the hole. Distance d+1 > d, so none of
  // them is already present.
  std::vector<Edge> added;
  added.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    added.emplace_back(n - d + k - 1, k);  // already in w indices
    h_edges.emplace_back(n - d + k - 1, k);
  }

  Graph h(n - 1, std::move(h_edges), FamilyTag{Family::cycle_power, n - 1, d});

  std::vector<std::uint8_t> fp(static_cast<size_t>(n - 1));
  for (int j = 0; j + 1 < n; ++j) fp[j] = f[orig(j + 1)];
  Coloring f_prime(std::move(fp));

  const int cut_after = cut_size(h, f_prime);

  ReductionResult result{std::move(h), std::move(f_prime), std::move(added),
                         cut_before, cut_after, pivot};
  return result;
}

}  // namespace rna
