#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "rna/coloring.hpp"
#include "rna/graph.hpp"

using rna::Coloring;
using rna::Edge;
using rna::Graph;
using rna::VertexLabeling;

TEST_CASE("coloring parsing and validation") {
  Coloring f = Coloring::from_string("1122");
  CHECK(f.size() == 4);
  CHECK(f[0] == 1);
  CHECK(f[3] == 2);
  CHECK(f.to_string() == "1122");
  CHECK(f.count(1) == 2);
  CHECK(f.count(2) == 2);
  CHECK(f.swapped().to_string() == "2211");

  CHECK_THROWS_AS(Coloring::from_string("1032"), std::invalid_argument);
  CHECK_THROWS_AS(Coloring(std::vector<std::uint8_t>{1, 3}), std::invalid_argument);
}

TEST_CASE("balance is a one-vertex tolerance") {
  CHECK(rna::is_balanced(Coloring::from_string("12")));
  CHECK(rna::is_balanced(Coloring::from_string("112")));
  CHECK(rna::is_balanced(Coloring::from_string("1")));
  CHECK(rna::is_balanced(Coloring{}));
  CHECK_FALSE(rna::is_balanced(Coloring::from_string("1112")));
  CHECK_FALSE(rna::is_balanced(Coloring::from_string("2222")));
}

TEST_CASE("cut sets") {
  Graph p6 = rna::path_graph(6);
  Coloring f = Coloring::from_string("111222");
  CHECK(rna::cut_size(p6, f) == 1);
  auto cut = rna::cut_set(p6, f);
  REQUIRE(cut.size() == 1);
  CHECK(cut.edges[0] == Edge(2, 3));

  CHECK(rna::cut_size(p6, f.swapped()) == 1);
  CHECK_THROWS_AS(rna::cut_size(p6, Coloring::from_string("11")),
                  std::invalid_argument);

  SUBCASE("cut_size agrees with cut_set on random instances") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 9);
      Graph g = testutil::random_graph(n, 0.5, rng);
      Coloring c = testutil::random_balanced_coloring(n, rng);
      CHECK(rna::cut_set(g, c).size() == rna::cut_size(g, c));
    }
  }
}

TEST_CASE("labelings must be permutations of 1..n") {
  CHECK_NOTHROW(VertexLabeling({3, 1, 2}));
  CHECK_THROWS_AS(VertexLabeling({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(VertexLabeling({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(VertexLabeling({1, 2, 4}), std::invalid_argument);
}

TEST_CASE("parity signature signs") {
  Graph p4 = rna::path_graph(4);
  VertexLabeling l({1, 3, 2, 4});  // odd, odd, even, even
  auto sig = rna::labeling_to_signature(p4, l);
  CHECK(sig.sign(Edge(0, 1)) == 1);
  CHECK(sig.sign(Edge(1, 2)) == -1);
  CHECK(sig.sign(Edge(2, 3)) == 1);
  CHECK(sig.negative_count() == 1);
  REQUIRE(sig.negative_edges().size() == 1);
  CHECK(sig.negative_edges()[0] == Edge(1, 2));
  CHECK_THROWS_AS(sig.sign(Edge(0, 3)), std::out_of_range);
}

TEST_CASE("negative edges of a labeling are the cut of its coloring") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = testutil::random_graph(n, 0.5, rng);
    VertexLabeling l = testutil::random_labeling(n, rng);
    Coloring f = rna::labeling_to_coloring(l);

    CHECK(rna::is_balanced(f));
    auto sig = rna::labeling_to_signature(g, l);
    CHECK(sig.negative_edges() == rna::cut_set(g, f).edges);
  }
}

TEST_CASE("coloring to labeling round trip") {
  CHECK(rna::coloring_to_labeling(Coloring::from_string("1212")) ==
        VertexLabeling({1, 2, 3, 4}));

  CHECK_THROWS_AS(rna::coloring_to_labeling(Coloring::from_string("1112")),
                  std::invalid_argument);

  // Odd labels always land on the weakly larger class, so converting back
  // recovers the coloring up to the color swap that choice encodes.
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Coloring f = testutil::random_balanced_coloring(n, rng);
    VertexLabeling l = rna::coloring_to_labeling(f);
    Coloring back = rna::labeling_to_coloring(l);
    if (f.count(1) >= f.count(2)) {
      CHECK(back == f);
    } else {
      CHECK(back == f.swapped());
    }
  }
}
