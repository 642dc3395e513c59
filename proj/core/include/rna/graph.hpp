#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rna {

/// Undirected edge with endpoints held in canonical order (u < v).
struct Edge {
  int u;
  int v;

  Edge(int a, int b);  // normalizes order, rejects self-loops

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Family { custom, cycle_power, path, cycle, star, wheel, complete };

std::string_view family_name(Family kind);

/// Records which generator produced a graph. Solvers use the cycle-power
/// tag for warm starts and closed-form bounds; parsed files keep the tag
/// via a `# family ...` comment.
struct FamilyTag {
  Family kind = Family::custom;
  int n = 0;
  int d = 0;  // cycle powers only

  bool is_cycle_power() const { return kind == Family::cycle_power; }

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically sorted; adjacency lists are sorted as well,
/// so membership checks are binary searches. Instances never change after
/// construction and are safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, FamilyTag tag = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  const FamilyTag& family() const { return tag_; }

  /// Structural equality: vertex count and edge set. Tags are ignored.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;     // canonical, sorted, duplicate-free
  std::vector<int> adj_;        // CSR neighbor storage
  std::vector<int> adj_start_;  // n_+1 offsets into adj_
  FamilyTag tag_;
};

/// d-th power of the n-cycle: vertices i and i+j (mod n) are adjacent for
/// every j in 1..d. Requires d >= 1 and n >= 2d+1; has exactly n*d edges.
Graph cycle_power(int n, int d);

Graph path_graph(int n);      // n >= 2
Graph cycle_graph(int n);     // n >= 3
Graph star_graph(int n);      // n >= 4; vertex 0 is the center
Graph wheel_graph(int n);     // n >= 4; vertex 0 is the hub
Graph complete_graph(int n);  // n >= 1

/// Builds the graph a tag describes; throws std::invalid_argument for
/// out-of-range parameters or a custom tag.
Graph make_family(const FamilyTag& tag);

/// Reads the edge-list format: an optional `# family ...` comment, a header
/// line "n m", then m lines "u v". '#' lines and blank lines are ignored.
/// Throws parse_error on malformed input, out-of-range indices, self-loops,
/// or duplicate edges.
Graph parse_edge_list(std::string_view text);

/// Canonical serialization: family comment (when tagged), header, then
/// edges sorted with u < v. parse -> serialize is the identity on its
/// own output.
std::string serialize_edge_list(const Graph& g);

}  // namespace rna
