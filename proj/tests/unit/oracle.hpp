#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library: plain bitmask complexes, dense elimination, direct
// enumeration of every vertex subset.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;

inline int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (((m[r][c] % p) + p) % p) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    int inv = 1;
    const int a = ((m[rank][c] % p) + p) % p;
    while (a * inv % p != 1) ++inv;
    for (auto& x : m[rank]) x = ((x * inv) % p + p) % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int f = ((m[r][c] % p) + p) % p;
      if (!f) continue;
      for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers (index l + 1) of the complex whose faces are the
/// masks in `faces` (closed under subsets, may include the empty face).
inline std::vector<int> reduced_betti(const std::vector<std::uint32_t>& faces, int p) {
  int top = -1;
  for (auto f : faces) top = std::max(top, __builtin_popcount(f));
  if (top < 0) return {};
  std::vector<std::vector<std::uint32_t>> by(static_cast<std::size_t>(top) + 2);
  for (auto f : faces) by[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
  for (auto& v : by) std::sort(v.begin(), v.end());
  std::vector<int> rk(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 1; s <= top; ++s) {
    const auto& up = by[static_cast<std::size_t>(s)];
    const auto& lo = by[static_cast<std::size_t>(s - 1)];
    if (up.empty() || lo.empty()) continue;
    std::vector<std::vector<int>> m(up.size(), std::vector<int>(lo.size(), 0));
    for (std::size_t i = 0; i < up.size(); ++i) {
      int sign = 1;
      for (int v = 0; v < 32; ++v) {
        if (!(up[i] >> v & 1U)) continue;
        const auto f = up[i] & ~(1U << v);
        const auto j = static_cast<std::size_t>(std::lower_bound(lo.begin(), lo.end(), f) - lo.begin());
        m[i][j] = sign;
        sign = -sign;
      }
    }
    rk[static_cast<std::size_t>(s)] = rank_mod_p(std::move(m), p);
  }
  std::vector<int> b(static_cast<std::size_t>(top) + 1, 0);
  for (int s = 0; s <= top; ++s)
    b[static_cast<std::size_t>(s)] = static_cast<int>(by[static_cast<std::size_t>(s)].size()) - rk[static_cast<std::size_t>(s)] -
                                     rk[static_cast<std::size_t>(s) + 1];
  return b;
}

/// Regularity of the monomial ideal with the given exponent vectors, by
/// polarization and Hochster's formula over every vertex subset. Linear
/// generators are dropped together with their variable. Returns 1 when only
/// linear generators remain (the ideal is generated by variables).
inline int regularity(const std::vector<Exps>& gens_in, int p = 2) {
  const std::size_t n = gens_in.empty() ? 0 : gens_in[0].size();
  std::vector<Exps> gens;
  for (const auto& g : gens_in) {
    bool redundant = false;
    for (const auto& h : gens_in) {
      if (&h == &g) continue;
      bool divides = true, equal = true;
      for (std::size_t i = 0; i < n; ++i) {
        divides = divides && h[i] <= g[i];
        equal = equal && h[i] == g[i];
      }
      if (divides && (!equal || &h < &g)) redundant = true;
    }
    int deg = 0;
    for (int e : g) deg += e;
    if (!redundant && deg >= 2) gens.push_back(g);
  }
  if (gens.empty()) return 1;
  // polarized variable (v, c) for c < max exponent of v
  std::vector<std::vector<int>> id(n);
  int nv = 0;
  for (std::size_t v = 0; v < n; ++v) {
    int e = 0;
    for (const auto& g : gens) e = std::max(e, g[v]);
    for (int c = 0; c < e; ++c) id[v].push_back(nv++);
  }
  std::vector<std::uint32_t> sup;
  for (const auto& g : gens) {
    std::uint32_t m = 0;
    for (std::size_t v = 0; v < n; ++v)
      for (int c = 0; c < g[v]; ++c) m |= 1U << id[v][static_cast<std::size_t>(c)];
    sup.push_back(m);
  }
  int best = 0;
  for (std::uint32_t w = 0; w < (1U << nv); ++w) {
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f = w;; f = (f - 1) & w) {
      bool face = true;
      for (auto s : sup)
        if ((s & f) == s) face = false;
      if (face) faces.push_back(f);
      if (f == 0) break;
    }
    const auto b = reduced_betti(faces, p);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) best = std::max(best, static_cast<int>(i) + 1);  // l = i - 1, value l + 2
  }
  return best;
}

/// Edge-ideal regularity of a graph on n <= 20 vertices.
inline int edge_regularity(int n, const std::vector<std::pair<int, int>>& edges, int s = 1, int p = 2) {
  std::vector<Exps> gens;
  for (auto [u, v] : edges) {
    Exps e(static_cast<std::size_t>(n), 0);
    ++e[static_cast<std::size_t>(u)];
    ++e[static_cast<std::size_t>(v)];
    gens.push_back(e);
  }
  std::vector<Exps> pw = {Exps(static_cast<std::size_t>(n), 0)};
  for (int k = 0; k < s; ++k) {
    std::vector<Exps> next;
    for (const auto& a : pw)
      for (const auto& g : gens) {
        Exps c = a;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += g[i];
        if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
      }
    pw = std::move(next);
  }
  return regularity(pw, p);
}

/// Adjacency masks of a graph given as an edge list.
inline std::vector<std::uint32_t> adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)] |= 1U << v;
    adj[static_cast<std::size_t>(v)] |= 1U << u;
  }
  return adj;
}

/// Induced cycle of length >= 4 exists: some vertex subset of size >= 4 whose
/// induced subgraph is connected and 2-regular.
inline bool has_long_induced_cycle(int n, const std::vector<std::uint32_t>& adj, int min_len = 4, int max_len = 32) {
  for (std::uint32_t w = 0; w < (1U << n); ++w) {
    const int k = __builtin_popcount(w);
    if (k < min_len || k > max_len) continue;
    bool regular = true;
    for (int v = 0; v < n && regular; ++v)
      if (w >> v & 1U) regular = __builtin_popcount(adj[static_cast<std::size_t>(v)] & w) == 2;
    if (!regular) continue;
    std::uint32_t seen = w & (~w + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1U) next |= adj[static_cast<std::size_t>(v)] & w;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == w) return true;
  }
  return false;
}

inline std::vector<std::uint32_t> complement(int n, const std::vector<std::uint32_t>& adj) {
  std::vector<std::uint32_t> c(adj.size());
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  for (int v = 0; v < n; ++v) c[static_cast<std::size_t>(v)] = all & ~adj[static_cast<std::size_t>(v)] & ~(1U << v);
  return c;
}

inline bool two_colorable(int n, const std::vector<std::uint32_t>& adj) {
  for (std::uint32_t left = 0; left < (1U << n); ++left) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const std::uint32_t same = (left >> v & 1U) ? left : ~left;
      ok = !(adj[static_cast<std::size_t>(v)] & same);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
