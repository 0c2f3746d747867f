#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regkit/bits.hpp"
#include "regkit/errors.hpp"

namespace regkit {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {
    if (n > kMaxVertices) throw std::length_error("graph has more than 1024 vertices");
  }

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  [[nodiscard]] std::size_t order() const { return adj_.size(); }
  [[nodiscard]] std::size_t num_edges() const {
    std::size_t m = 0;
    for (const auto& row : adj_) m += row.size();
    return m / 2;
  }
  [[nodiscard]] bool has_edges() const {
    for (const auto& row : adj_)
      if (!row.empty()) return true;
    return false;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw PreconditionError("self-loops are not allowed in a simple graph");
    adj_.at(u).insert(v);
    adj_.at(v).insert(u);
  }
  void remove_edge(std::size_t u, std::size_t v) {
    adj_.at(u).erase(v);
    adj_.at(v).erase(u);
  }
  [[nodiscard]] bool has_edge(std::size_t u, std::size_t v) const { return adj_.at(u).contains(v); }

  [[nodiscard]] const VertexSet& neighbors(std::size_t v) const { return adj_.at(v); }
  [[nodiscard]] VertexSet closed_neighbors(std::size_t v) const {
    VertexSet s = adj_.at(v);
    s.insert(v);
    return s;
  }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph h(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<std::size_t> vertex_map;  ///< new index -> old index
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  InducedSubgraph out;
  out.vertex_map = w.elements();
  const std::size_t m = out.vertex_map.size();
  out.graph = Graph(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (g.has_edge(out.vertex_map[i], out.vertex_map[j])) out.graph.add_edge(i, j);
  return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

/// Connected components as vertex sets, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> comps;
  VertexSet seen(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n);
    std::vector<std::size_t> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      comp.insert(u);
      g.neighbors(u).for_each([&](std::size_t v) {
        if (!seen.contains(v)) {
          seen.insert(v);
          stack.push_back(v);
        }
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// BFS 2-colouring; the lowest vertex of every component goes to `left`.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      bool clash = false;
      g.neighbors(u).for_each([&](std::size_t v) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  Bipartition part{VertexSet(n), VertexSet(n)};
  for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? part.left : part.right).insert(v);
  return part;
}

/// Lexicographic breadth-first search order (partition refinement).
inline std::vector<std::size_t> lex_bfs(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> classes;
  if (n > 0) {
    classes.emplace_back();
    for (std::size_t v = 0; v < n; ++v) classes[0].push_back(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!classes.empty()) {
    const std::size_t pivot = classes.front().front();
    classes.front().erase(classes.front().begin());
    if (classes.front().empty()) classes.erase(classes.begin());
    order.push_back(pivot);
    std::vector<std::vector<std::size_t>> refined;
    refined.reserve(classes.size() * 2);
    for (auto& cls : classes) {
      std::vector<std::size_t> in, out;
      for (auto v : cls) (g.has_edge(pivot, v) ? in : out).push_back(v);
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    classes = std::move(refined);
  }
  return order;
}

/// True iff for every vertex its later neighbours in `order` form a clique.
inline bool is_perfect_elimination_ordering(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.order();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) return false;
    pos[order[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = order[i];
    std::size_t parent = n;
    std::size_t parent_pos = n;
    std::vector<std::size_t> later;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (pos[u] > i) {
        later.push_back(u);
        if (pos[u] < parent_pos) {
          parent_pos = pos[u];
          parent = u;
        }
      }
    });
    for (auto u : later)
      if (u != parent && !g.has_edge(parent, u)) return false;
  }
  return true;
}

/// Returns a perfect elimination ordering (reverse LexBFS) when `g` is chordal.
inline std::optional<std::vector<std::size_t>> is_chordal(const Graph& g) {
  auto order = lex_bfs(g);
  std::vector<std::size_t> peo(order.rbegin(), order.rend());
  if (!is_perfect_elimination_ordering(g, peo)) return std::nullopt;
  return peo;
}

inline bool is_cochordal(const Graph& g) { return is_chordal(complement(g)).has_value(); }

/// True iff `g` has an induced 4-cycle.
inline bool has_induced_c4(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      if (g.has_edge(a, c)) continue;
      const VertexSet common = g.neighbors(a) & g.neighbors(c);
      if (common.size() < 2) continue;
      const auto cs = common.elements();
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
          if (!g.has_edge(cs[i], cs[j])) return true;
    }
  }
  return false;
}

/// Gap-free (2K2-free): the complement has no induced 4-cycle.
inline bool is_gap_free(const Graph& g) { return !has_induced_c4(complement(g)); }

/// G plus every edge xy with x in N(a), y in N(b), x != y.
inline Graph suspension_graph(const Graph& g, std::size_t a, std::size_t b) {
  if (a >= g.order() || b >= g.order() || !g.has_edge(a, b))
    throw PreconditionError("suspension_graph: ab must be an edge");
  Graph h = g;
  g.neighbors(a).for_each([&](std::size_t x) {
    g.neighbors(b).for_each([&](std::size_t y) {
      if (x != y) h.add_edge(x, y);
    });
  });
  return h;
}

}  // namespace regkit
