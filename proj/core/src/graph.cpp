#include "rna/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rna/errors.hpp"

namespace rna {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  }
}

std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::cycle_power: return "cycle-power";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
    case Family::custom: break;
  }
  return "custom";
}

Graph::Graph(int n, std::vector<Edge> edges, FamilyTag tag)
    : n_(n), edges_(std::move(edges)), tag_(tag) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n_) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") with n=" +
                                  std::to_string(n_));
    }
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) {
    std::sort(edges_.begin(), edges_.end());
  }
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }

  adj_start_.assign(static_cast<size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_start_[static_cast<size_t>(e.u) + 1];
    ++adj_start_[static_cast<size_t>(e.v) + 1];
  }
  for (int v = 0; v < n_; ++v) adj_start_[v + 1] += adj_start_[v];
  adj_.resize(edges_.size() * 2);
  std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
  // A lexicographic edge scan appends each vertex's smaller partners in
  // ascending order and then its larger partners in ascending order, so
  // every adjacency list comes out sorted without a per-vertex pass.
  for (const Edge& e : edges_) {
    adj_[fill[e.u]++] = e.v;
    adj_[fill[e.v]++] = e.u;
  }
}

std::span<const int> Graph::neighbors(int v) const {
  return {adj_.data() + adj_start_[v],
          adj_.data() + adj_start_[static_cast<size_t>(v) + 1]};
}

int Graph::degree(int v) const {
  return adj_start_[static_cast<size_t>(v) + 1] - adj_start_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph cycle_power(int n, int d) {
  if (d < 1) {
    throw std::invalid_argument("cycle power requires d >= 1, got d=" +
                                std::to_string(d));
  }
  if (n < 2 * d + 1) {
    throw std::invalid_argument("cycle power requires n >= 2d+1, got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * d);
  // With n >= 2d+1 each pair at cycle distance <= d appears exactly once;
  // emitting (u, u+1..u+d) then the wrap partners (u, n-d+u..n-1) keeps the
  // list in canonical order so the constructor skips its sort.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v <= std::min(u + d, n - 1); ++v) {
      edges.emplace_back(u, v);
    }
    for (int v = n - d + u; v < n; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges), FamilyTag{Family::cycle_power, n, d});
}

Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path requires n >= 2");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges), FamilyTag{Family::path, n, 0});
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges), FamilyTag{Family::cycle, n, 0});
}

Graph star_graph(int n) {
  if (n < 4) throw std::invalid_argument("star requires n >= 4");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges), FamilyTag{Family::star, n, 0});
}

Graph wheel_graph(int n) {
  if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
  std::vector<Edge> edges;
  edges.reserve(2 * (static_cast<size_t>(n) - 1));
  // Rim cycle on 1..n-1, hub 0 joined to every rim vertex.
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i == n - 1 ? 1 : i + 1);
  }
  return Graph(n, std::move(edges), FamilyTag{Family::wheel, n, 0});
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges), FamilyTag{Family::complete, n, 0});
}

Graph make_family(const FamilyTag& tag) {
  switch (tag.kind) {
    case Family::cycle_power: return cycle_power(tag.n, tag.d);
    case Family::path: return path_graph(tag.n);
    case Family::cycle: return cycle_graph(tag.n);
    case Family::star: return star_graph(tag.n);
    case Family::wheel: return wheel_graph(tag.n);
    case Family::complete: return complete_graph(tag.n);
    case Family::custom: break;
  }
  throw std::invalid_argument("custom tag has no generator");
}

namespace {

// Expected edge count of a family, used to cross-check `# family` comments
// against the header before trusting the tag.
long long family_edge_count(const FamilyTag& tag) {
  switch (tag.kind) {
    case Family::cycle_power: return static_cast<long long>(tag.n) * tag.d;
    case Family::path: return tag.n - 1;
    case Family::cycle: return tag.n;
    case Family::star: return tag.n - 1;
    case Family::wheel: return 2LL * (tag.n - 1);
    case Family::complete: return static_cast<long long>(tag.n) * (tag.n - 1) / 2;
    case Family::custom: break;
  }
  return -1;
}

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// "# family cycle-power 7 2" -> tag; unknown comments yield no tag.
bool parse_family_comment(std::string_view line, FamilyTag& tag, int line_no) {
  auto tokens = split_ws(line);
  if (tokens.size() < 2 || tokens[0] != "#" || tokens[1] != "family") {
    // Also accept "#family" glued to the marker.
    if (tokens.empty() || tokens[0] != "#family") return false;
    tokens.insert(tokens.begin(), "#");
  }
  auto fail = [line_no](const std::string& what) -> bool {
    throw parse_error("line " + std::to_string(line_no) + ": " + what);
  };
  if (tokens.size() < 4) return fail("incomplete family comment");
  FamilyTag parsed;
  std::string_view name = tokens[2];
  if (name == "cycle-power") parsed.kind = Family::cycle_power;
  else if (name == "path") parsed.kind = Family::path;
  else if (name == "cycle") parsed.kind = Family::cycle;
  else if (name == "star") parsed.kind = Family::star;
  else if (name == "wheel") parsed.kind = Family::wheel;
  else if (name == "complete") parsed.kind = Family::complete;
  else return false;  // not a directive we know; treat as plain comment
  if (!parse_int(tokens[3], parsed.n)) return fail("bad family parameter");
  if (parsed.kind == Family::cycle_power) {
    if (tokens.size() != 5 || !parse_int(tokens[4], parsed.d)) {
      return fail("cycle-power family comment needs n and d");
    }
  } else if (tokens.size() != 4) {
    return fail("trailing tokens in family comment");
  }
  tag = parsed;
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  FamilyTag tag;
  bool have_tag = false;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<Edge> edges;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') {
      FamilyTag parsed;
      if (parse_family_comment(line, parsed, line_no)) {
        tag = parsed;
        have_tag = true;
      }
      continue;
    }

    auto fail = [line_no](const std::string& what) {
      throw parse_error("line " + std::to_string(line_no) + ": " + what);
    };

    if (!have_header) {
      if (tokens.size() != 2 || !parse_int(tokens[0], n) || !parse_int(tokens[1], m)) {
        fail("expected header \"n m\"");
      }
      if (n < 0 || m < 0) fail("negative count in header");
      have_header = true;
      edges.reserve(static_cast<size_t>(m));
      continue;
    }

    int a = 0, b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      fail("expected edge line \"u v\"");
    }
    if (static_cast<long long>(edges.size()) >= m) {
      fail("more than the declared " + std::to_string(m) + " edges");
    }
    if (a == b) fail("self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n) {
      fail("vertex index out of range for n=" + std::to_string(n));
    }
    edges.emplace_back(a, b);
  }

  if (!have_header) throw parse_error("missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw parse_error("declared " + std::to_string(m) + " edges but found " +
                      std::to_string(edges.size()));
  }
  {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::adjacent_find(sorted.begin(), sorted.end());
    if (it != sorted.end()) {
      throw parse_error("duplicate edge (" + std::to_string(it->u) + ", " +
                        std::to_string(it->v) + ")");
    }
  }
  if (have_tag) {
    if (tag.n != n || family_edge_count(tag) != m) {
      throw parse_error("family comment does not match header");
    }
    if (tag.kind == Family::cycle_power && (tag.d < 1 || tag.n < 2 * tag.d + 1)) {
      throw parse_error("family comment has out-of-range cycle-power parameters");
    }
  }
  return Graph(n, std::move(edges), have_tag ? tag : FamilyTag{});
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  const FamilyTag& tag = g.family();
  if (tag.kind != Family::custom) {
    out << "# family " << family_name(tag.kind) << ' ' << tag.n;
    if (tag.kind == Family::cycle_power) out << ' ' << tag.d;
    out << '\n';
  }
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace rna
