#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "regkit/errors.hpp"
#include "regkit/graph.hpp"
#include "regkit/monomial.hpp"

namespace regkit {

/// I(G): one generator x_u x_v per edge.
inline MonomialIdeal edge_ideal(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) gens.push_back(Monomial::product_of(n, {u, v}));
  auto out = minimalize(std::move(gens), n);
  if (!g.labels().empty()) out.set_var_names(g.labels());
  return out;
}

/// Inverse of edge_ideal for squarefree quadratic ideals.
inline Graph graph_of_quadratic_ideal(const MonomialIdeal& ideal) {
  Graph g(ideal.nvars());
  for (const auto& m : ideal.generators()) {
    if (m.degree() != 2 || !m.is_squarefree())
      throw PreconditionError("generator " + format_monomial(m) + " is not a squarefree quadratic");
    const auto vs = m.support().elements();
    g.add_edge(vs[0], vs[1]);
  }
  return g;
}

/// I(G) + (xy : x in N(a), y in N(b)), squares u^2 included for common
/// neighbours u. Equals (I(G)^2 : ab).
inline MonomialIdeal colon_square_formula(const Graph& g, std::size_t a, std::size_t b) {
  if (a >= g.order() || b >= g.order() || !g.has_edge(a, b))
    throw PreconditionError("colon_square_formula: ab must be an edge");
  const std::size_t n = g.order();
  std::vector<Monomial> gens = edge_ideal(g).generators();
  g.neighbors(a).for_each([&](std::size_t x) {
    g.neighbors(b).for_each([&](std::size_t y) {
      Monomial m(n);
      m.raise(x, 1);
      m.raise(y, 1);
      gens.push_back(std::move(m));
    });
  });
  auto out = minimalize(std::move(gens), n);
  if (!g.labels().empty()) out.set_var_names(g.labels());
  return out;
}

/// (I(G)^{s+1} : e1...es) for bipartite G, returned as a graph after checking
/// that it is the edge ideal of a bipartite graph on G's bipartition.
inline Graph bipartite_colon_graph(const Graph& g, const std::vector<Edge>& edges) {
  const auto part = is_bipartite(g);
  if (!part) throw PreconditionError("bipartite_colon_graph: graph is not bipartite");
  if (edges.empty()) throw PreconditionError("bipartite_colon_graph: need at least one edge");
  const std::size_t n = g.order();
  Monomial product(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || !g.has_edge(u, v))
      throw PreconditionError("bipartite_colon_graph: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    product.raise(u, 1);
    product.raise(v, 1);
  }
  const auto s = static_cast<unsigned>(edges.size());
  const auto result = colon(power(edge_ideal(g), s + 1), product);
  Graph h(n);
  for (const auto& m : result.generators()) {
    if (m.degree() != 2 || !m.is_squarefree())
      throw InternalError("bipartite colon produced non-edge generator " + format_monomial(m));
    const auto vs = m.support().elements();
    if (part->left.contains(vs[0]) == part->left.contains(vs[1]))
      throw InternalError("bipartite colon produced edge " + format_monomial(m) + " inside one side");
    h.add_edge(vs[0], vs[1]);
  }
  return h;
}

}  // namespace regkit
