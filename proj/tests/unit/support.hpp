#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "regkit/graph.hpp"

namespace support {

using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList all_pairs(int n) {
  EdgeList out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

/// The labeled graph on n vertices selected by bits of `mask` over all_pairs(n).
inline EdgeList edges_of_mask(int n, std::uint64_t mask) {
  EdgeList out;
  const auto pairs = all_pairs(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1U) out.push_back(pairs[i]);
  return out;
}

inline regkit::Graph to_graph(int n, const EdgeList& edges) {
  regkit::Graph g(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  return g;
}

inline EdgeList to_edges(const regkit::Graph& g) {
  EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return out;
}

/// Random graph with at least one edge; bipartite across a random cut when asked.
inline regkit::Graph random_graph(std::mt19937_64& rng, int n_max, bool bipartite = false) {
  while (true) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
    const int left = bipartite ? 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)) : 0;
    EdgeList e;
    for (auto [u, v] : all_pairs(n)) {
      if (bipartite && (u < left) == (v < left)) continue;
      if (rng() % 2) e.emplace_back(u, v);
    }
    if (!e.empty()) return to_graph(n, e);
  }
}

}  // namespace support
