#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "rna/bounds.hpp"
#include "rna/coloring.hpp"
#include "rna/exact.hpp"
#include "rna/graph.hpp"

using rna::Coloring;
using rna::Graph;

TEST_CASE("contiguous coloring examples") {
  CHECK(rna::contiguous_coloring(7, 2).to_string() == "1112222");
  CHECK(rna::cut_size(rna::cycle_power(7, 2), rna::contiguous_coloring(7, 2)) == 6);

  Coloring f10 = rna::contiguous_coloring(10, 2);
  CHECK(f10.to_string() == "1111122222");
  CHECK(rna::cut_size(rna::cycle_power(10, 2), f10) == 6);

  CHECK(rna::cut_size(rna::cycle_power(11, 3), rna::contiguous_coloring(11, 3)) == 12);

  CHECK_THROWS_AS(rna::contiguous_coloring(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(rna::contiguous_coloring(4, 2), std::invalid_argument);
}

TEST_CASE("contiguous coloring is balanced and cuts exactly d(d+1)") {
  for (int d = 2; d <= 5; ++d) {
    for (int n : {2 * d + 1, 2 * d + 2, 3 * d, 50, 1000}) {
      if (n < 2 * d + 1) continue;
      Coloring f = rna::contiguous_coloring(n, d);
      CHECK(rna::is_balanced(f));
      CHECK(rna::cut_size(rna::cycle_power(n, d), f) == rna::theorem_value(d));
    }
  }
}

TEST_CASE("closed form and sandwich bounds") {
  CHECK(rna::theorem_value(2) == 6);
  CHECK(rna::theorem_value(3) == 12);
  CHECK(rna::theorem_value(5) == 30);
  CHECK_THROWS_AS(rna::theorem_value(1), std::invalid_argument);

  CHECK(rna::ska_bounds(2).lower == 4);
  CHECK(rna::ska_bounds(2).upper == 6);
  CHECK(rna::ska_bounds(3).lower == 6);
  CHECK(rna::ska_bounds(3).upper == 12);
  CHECK(rna::ska_bounds(4).lower == 8);
  CHECK(rna::ska_bounds(4).upper == 20);
  CHECK_THROWS_AS(rna::ska_bounds(1), std::invalid_argument);
}

TEST_CASE("kang bound arithmetic") {
  CHECK(rna::kang_bound(rna::cycle_power(7, 2)) == 8);
  CHECK(rna::kang_bound(rna::complete_graph(5)) == 6);
  CHECK(rna::kang_bound(rna::path_graph(4)) == 2);
}

TEST_CASE("reduction examples") {
  SUBCASE("n=8 d=2 with the contiguous coloring") {
    auto res = rna::reduce_cycle_power(8, 2, rna::contiguous_coloring(8, 2), 0);
    CHECK(res.cut_before == 6);
    CHECK(res.cut_after <= res.cut_before);
    CHECK(res.h == rna::cycle_power(7, 2));
    CHECK(res.rotation == 0);
    CHECK(rna::is_balanced(res.f_prime));
    CHECK(rna::cut_size(res.h, res.f_prime) == res.cut_after);
    REQUIRE(res.added_edges.size() == 2);
    CHECK(res.added_edges[0] == rna::Edge(0, 5));
    CHECK(res.added_edges[1] == rna::Edge(1, 6));
  }
  SUBCASE("n=9 d=2 with a one-arc coloring") {
    auto res =
        rna::reduce_cycle_power(9, 2, Coloring::from_string("111112222"), 0);
    CHECK(res.cut_before == 6);
    CHECK(res.cut_after == 6);
    CHECK(res.h == rna::cycle_power(8, 2));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(rna::reduce_cycle_power(7, 3, Coloring::from_string("1112222"), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(rna::reduce_cycle_power(8, 1, Coloring::from_string("11112222"), 0),
                    std::invalid_argument);
    // unbalanced coloring
    CHECK_THROWS_AS(rna::reduce_cycle_power(8, 2, Coloring::from_string("11111222"), 0),
                    std::invalid_argument);
    // wrong length
    CHECK_THROWS_AS(rna::reduce_cycle_power(8, 2, Coloring::from_string("1122"), 0),
                    std::invalid_argument);
    // pivot out of range
    CHECK_THROWS_AS(rna::reduce_cycle_power(8, 2, Coloring::from_string("11112222"), 8),
                    std::invalid_argument);
    // minority-class pivot: class 2 has 4 < ceil(9/2) = 5
    CHECK_THROWS_AS(rna::reduce_cycle_power(9, 2, Coloring::from_string("111112222"), 5),
                    std::invalid_argument);
  }
}

TEST_CASE("reduction produces the next smaller cycle power") {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2 * d + 2; n <= 24; ++n) {
      // vertex n-1 sits in the arc whose class is weakly larger for every n
      auto res =
          rna::reduce_cycle_power(n, d, rna::contiguous_coloring(n, d), n - 1);
      CHECK(res.h == rna::cycle_power(n - 1, d));
      CHECK(res.rotation == n - 1);
      CHECK(static_cast<int>(res.added_edges.size()) == d);
      for (const rna::Edge& e : res.added_edges) CHECK(res.h.has_edge(e.u, e.v));
    }
  }
}

TEST_CASE("patch edges are never already present") {
  // Each patch edge joins vertices at cycle distance d+1 in the original
  // graph, which is out of reach for C_n^d whenever n >= 2d+2.
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2 * d + 2; n <= 20; ++n) {
      Graph g = rna::cycle_power(n, d);
      for (int k = 0; k < d; ++k) {
        CHECK_FALSE(g.has_edge(n - d + k, (k + 1) % n));
      }
    }
  }
}

TEST_CASE("reduction never increases the cut") {
  std::mt19937_64 rng(1337);
  for (auto [n, d] : {std::pair{8, 2}, {12, 3}, {16, 4}}) {
    for (int trial = 0; trial < 300; ++trial) {
      Coloring f = testutil::random_balanced_coloring(n, rng);
      // any vertex of a weakly larger class is a valid pivot
      const std::uint8_t majority = f.count(1) >= f.count(2) ? 1 : 2;
      std::vector<int> candidates;
      for (int v = 0; v < n; ++v) {
        if (f[v] == majority) candidates.push_back(v);
      }
      const int pivot = candidates[rng() % candidates.size()];

      auto res = rna::reduce_cycle_power(n, d, f, pivot);
      CHECK(res.cut_after <= res.cut_before);
      CHECK(rna::is_balanced(res.f_prime));
      CHECK(res.h == rna::cycle_power(n - 1, d));
      CHECK(res.rotation == pivot);
      CHECK(rna::cut_size(res.h, res.f_prime) == res.cut_after);
    }
  }
}

TEST_CASE("sandwich consistency on exhaustively solved cycle powers") {
  for (int d = 2; d <= 3; ++d) {
    for (int n = 2 * d + 1; n <= 14; ++n) {
      Graph g = rna::cycle_power(n, d);
      const int exact = rna::brute_force_rna(g).rna_value;
      CHECK(rna::ska_bounds(d).lower <= exact);
      CHECK(exact <= rna::ska_bounds(d).upper);
      CHECK(exact <= rna::kang_bound(g));
    }
  }
}
