#include "rna/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "rna/graph.hpp"

namespace rna {

Coloring::Coloring(std::vector<std::uint8_t> colors) : colors_(std::move(colors)) {
  for (std::uint8_t c : colors_) {
    if (c != 1 && c != 2) {
      throw std::invalid_argument("coloring values must be 1 or 2");
    }
  }
}

Coloring Coloring::from_string(std::string_view s) {
  std::vector<std::uint8_t> colors;
  colors.reserve(s.size());
  for (char ch : s) {
    if (ch != '1' && ch != '2') {
      throw std::invalid_argument(std::string("bad coloring character '") + ch + "'");
    }
    colors.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Coloring(std::move(colors));
}

int Coloring::count(std::uint8_t color) const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), color));
}

Coloring Coloring::swapped() const {
  std::vector<std::uint8_t> flipped(colors_.size());
  for (size_t i = 0; i < colors_.size(); ++i) {
    flipped[i] = colors_[i] == 1 ? 2 : 1;
  }
  return Coloring(std::move(flipped));
}

std::string Coloring::to_string() const {
  std::string s(colors_.size(), '1');
  for (size_t i = 0; i < colors_.size(); ++i) {
    s[i] = static_cast<char>('0' + colors_[i]);
  }
  return s;
}

bool is_balanced(const Coloring& f) {
  return std::abs(f.count(1) - f.count(2)) <= 1;
}

VertexLabeling::VertexLabeling(std::vector<int> labels) : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  for (int x : labels_) {
    if (x < 1 || x > n || used[x]) {
      throw std::invalid_argument("labels must be a permutation of 1..n");
    }
    used[x] = 1;
  }
}

EdgeSignature::EdgeSignature(std::vector<Edge> edges, std::vector<std::int8_t> signs)
    : edges_(std::move(edges)), signs_(std::move(signs)) {
  if (edges_.size() != signs_.size()) {
    throw std::invalid_argument("edge and sign counts differ");
  }
  for (std::int8_t s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
}

int EdgeSignature::sign(const Edge& e) const {
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == e) return signs_[i];
  }
  throw std::out_of_range("edge not in signature");
}

int EdgeSignature::negative_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

std::vector<Edge> EdgeSignature::negative_edges() const {
  std::vector<Edge> neg;
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (signs_[i] == -1) neg.push_back(edges_[i]);
  }
  return neg;
}

CutSet cut_set(const Graph& g, const Coloring& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw std::invalid_argument("coloring size does not match vertex count");
  }
  CutSet cut;
  for (const Edge& e : g.edges()) {
    if (f[e.u] != f[e.v]) cut.edges.push_back(e);
  }
  return cut;
}

int cut_size(const Graph& g, const Coloring& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw std::invalid_argument("coloring size does not match vertex count");
  }
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (f[e.u] != f[e.v]) ++count;
  }
  return count;
}

EdgeSignature labeling_to_signature(const Graph& g, const VertexLabeling& l) {
  if (static_cast<int>(l.size()) != g.vertex_count()) {
    throw std::invalid_argument("labeling size does not match vertex count");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<std::int8_t> signs;
  signs.reserve(edges.size());
  for (const Edge& e : edges) {
    // Positive when the endpoint labels share parity.
    signs.push_back((l[e.u] & 1) == (l[e.v] & 1) ? 1 : -1);
  }
  return EdgeSignature(std::move(edges), std::move(signs));
}

Coloring labeling_to_coloring(const VertexLabeling& l) {
  std::vector<std::uint8_t> colors(static_cast<size_t>(l.size()));
  for (int v = 0; v < l.size(); ++v) {
    colors[v] = (l[v] & 1) ? 1 : 2;
  }
  return Coloring(std::move(colors));
}

VertexLabeling coloring_to_labeling(const Coloring& f) {
  if (!is_balanced(f)) {
    throw std::invalid_argument("only balanced colorings admit a parity labeling");
  }
  // Odd labels go to the weakly larger class so that ceil(n/2) odd values
  // suffice; within a class, labels increase with vertex index.
  const std::uint8_t odd_class = f.count(1) >= f.count(2) ? 1 : 2;
  std::vector<int> labels(static_cast<size_t>(f.size()), 0);
  int next_odd = 1, next_even = 2;
  for (int v = 0; v < f.size(); ++v) {
    if (f[v] == odd_class) {
      labels[v] = next_odd;
      next_odd += 2;
    } else {
      labels[v] = next_even;
      next_even += 2;
    }
  }
  return VertexLabeling(std::move(labels));
}

}  // namespace rna
