#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rna/graph.hpp"

namespace rna {

/// Vertex 2-coloring with colors in {1,2}. A coloring is *balanced* when
/// its class sizes differ by at most one; see is_balanced.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<std::uint8_t> colors);

  /// Parses a string of '1'/'2' characters indexed by vertex, e.g. "1112222".
  static Coloring from_string(std::string_view s);

  int size() const { return static_cast<int>(colors_.size()); }
  std::uint8_t operator[](int v) const { return colors_[static_cast<size_t>(v)]; }
  std::span<const std::uint8_t> colors() const { return colors_; }

  int count(std::uint8_t color) const;

  /// Copy with the two colors exchanged.
  Coloring swapped() const;

  std::string to_string() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint8_t> colors_;
};

/// True iff the class sizes differ by at most one.
bool is_balanced(const Coloring& f);

/// Bijection from vertices 0..n-1 onto the labels 1..n.
class VertexLabeling {
 public:
  VertexLabeling() = default;
  explicit VertexLabeling(std::vector<int> labels);  // must be a permutation of 1..n

  int size() const { return static_cast<int>(labels_.size()); }
  int operator[](int v) const { return labels_[static_cast<size_t>(v)]; }
  std::span<const int> labels() const { return labels_; }

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  std::vector<int> labels_;
};

/// Edge signs +1/-1 aligned with a graph's canonical edge order; the domain
/// is exactly the edge set of the graph it was built from.
class EdgeSignature {
 public:
  EdgeSignature(std::vector<Edge> edges, std::vector<std::int8_t> signs);

  std::span<const Edge> edges() const { return edges_; }
  std::span<const std::int8_t> signs() const { return signs_; }

  /// Sign of an edge; throws std::out_of_range for edges outside the domain.
  int sign(const Edge& e) const;

  int negative_count() const;
  std::vector<Edge> negative_edges() const;

 private:
  std::vector<Edge> edges_;  // sorted canonical
  std::vector<std::int8_t> signs_;
};

/// Edges whose endpoints receive different colors.
struct CutSet {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

/// The bichromatic edges of g under f. Throws std::invalid_argument when
/// the coloring length does not match the vertex count.
CutSet cut_set(const Graph& g, const Coloring& f);

/// size of cut_set(g, f) without materializing the edge list.
int cut_size(const Graph& g, const Coloring& f);

/// Parity signature of a labeling: an edge gets +1 iff its endpoints'
/// labels have the same parity.
EdgeSignature labeling_to_signature(const Graph& g, const VertexLabeling& l);

/// Color 1 for odd labels, 2 for even; always balanced, and its cut set
/// equals the negative-edge set of the labeling's parity signature.
Coloring labeling_to_coloring(const VertexLabeling& l);

/// Deterministic inverse: the weakly larger class receives the odd labels,
/// assigned in ascending vertex order. Throws on unbalanced input.
VertexLabeling coloring_to_labeling(const Coloring& f);

}  // namespace rna
