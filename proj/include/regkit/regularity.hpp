#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regkit/complex.hpp"
#include "regkit/detail/hochster.hpp"
#include "regkit/edge_ideal.hpp"
#include "regkit/graph.hpp"
#include "regkit/homology.hpp"
#include "regkit/monomial.hpp"
#include "regkit/options.hpp"

namespace regkit {

enum class Method { hochster, froeberg, component_sum, hhz_power, koszul_oracle };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::hochster: return "hochster";
    case Method::froeberg: return "froeberg";
    case Method::component_sum: return "component-sum";
    case Method::hhz_power: return "hhz-power";
    case Method::koszul_oracle: return "koszul-oracle";
  }
  return "unknown";
}

/// W and l with H~_l(Delta[W]) != 0 and l + 2 = value, in the variables of
/// the squarefree ideal the engine ran on (see hochster_ring).
struct Certificate {
  VertexSet w;
  int l = -1;
  std::vector<std::string> names;  ///< display names of the vertices of W
};

struct RegularityResult {
  int value = 0;
  Method method = Method::hochster;
  std::optional<Certificate> certificate;
  unsigned characteristic = 2;
  std::uint64_t evaluated = 0;  ///< candidate sets W examined
};

namespace detail {

inline Certificate make_certificate(const MonomialIdeal& ring, const VertexSet& w, int l) {
  Certificate c{w, l, {}};
  w.for_each([&](std::size_t v) { c.names.push_back(ring.var_name(v)); });
  return c;
}

inline std::vector<VertexSet> supports(const MonomialIdeal& ideal) {
  std::vector<VertexSet> out;
  out.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) out.push_back(g.support());
  return out;
}

/// Generator indices grouped by connected components of the support-overlap
/// graph, ordered by smallest generator index.
inline std::vector<std::vector<std::size_t>> support_components(const MonomialIdeal& ideal) {
  const auto sup = supports(ideal);
  const std::size_t k = sup.size();
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // union generators through shared variables
  std::vector<std::size_t> owner(ideal.nvars(), k);
  for (std::size_t i = 0; i < k; ++i)
    sup[i].for_each([&](std::size_t v) {
      if (owner[v] == k)
        owner[v] = i;
      else
        parent[find(i)] = find(owner[v]);
    });
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto r = find(i);
    if (slot[r] == k) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

/// Set when polarization added variables; see Fold.
inline std::optional<Fold> make_fold(const MonomialIdeal& ring, const PolarizationMap& map) {
  if (map.polarized_vars() == map.original_vars()) return std::nullopt;
  Fold f;
  f.nvars = map.original_vars();
  for (std::size_t v = 0; v < ring.nvars(); ++v) f.var.push_back(static_cast<std::uint32_t>(map.back(v).first));
  for (const auto& g : ring.generators()) {
    const auto d = depolarize(g, map);
    std::vector<std::uint8_t> e(f.nvars);
    for (std::size_t i = 0; i < f.nvars; ++i) e[i] = static_cast<std::uint8_t>(d[i]);
    f.gens.push_back(std::move(e));
  }
  return f;
}

inline MonomialIdeal sub_ideal(const MonomialIdeal& ideal, const std::vector<std::size_t>& idx) {
  std::vector<Monomial> gens;
  for (auto i : idx) gens.push_back(ideal.generators()[i]);
  auto out = minimalize(std::move(gens), ideal.nvars());
  out.set_var_names(ideal.var_names());
  return out;
}

}  // namespace detail

namespace detail {

inline RegularityResult hochster_folded(const MonomialIdeal& ideal, const EngineOptions& opt, const Fold* fold) {
  if (ideal.is_zero()) throw PreconditionError("regularity of the zero ideal is not defined");
  for (const auto& g : ideal.generators()) {
    if (!g.is_squarefree()) throw PreconditionError("reg_squarefree_hochster: " + format_monomial(g) + " is not squarefree");
    if (g.degree() < 2) throw PreconditionError("reg_squarefree_hochster: strip linear generators first");
  }
  const auto res = hochster_search(ideal.nvars(), supports(ideal), opt, fold);
  RegularityResult out;
  out.value = res.value;
  out.method = Method::hochster;
  out.certificate = make_certificate(ideal, res.witness, res.l);
  out.characteristic = opt.p;
  out.evaluated = res.evaluated;
  return out;
}

inline Polarization hochster_polarization(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("regularity of the zero ideal is not defined");
  const auto stripped = strip_linear_generators(ideal);
  if (stripped.ideal.is_zero())
    throw PreconditionError("ideal is generated by variables; stripping leaves the zero ideal");
  return polarize(stripped.ideal);
}

}  // namespace detail

/// Hochster's formula on the Stanley-Reisner complex of a squarefree ideal.
inline RegularityResult reg_squarefree_hochster(const MonomialIdeal& ideal, const EngineOptions& opt = {}) {
  return detail::hochster_folded(ideal, opt, nullptr);
}

/// Upper bound min(|support|, dim Delta + 2), one lower when the top homology
/// of Delta vanishes; falls back to |support| on very large complexes.
inline int hochster_upper_bound(const MonomialIdeal& squarefree, unsigned p = 2) {
  EngineOptions opt;
  opt.p = p;
  const auto sup = detail::supports(squarefree);
  return dispatch_width(squarefree.nvars(), [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    return detail::HochsterSearch<W>(squarefree.nvars(), sup, opt).topological_upper_bound();
  });
}

/// The squarefree ideal reg_monomial runs Hochster on: linear generators
/// stripped, then polarized.
inline MonomialIdeal hochster_ring(const MonomialIdeal& ideal) { return detail::hochster_polarization(ideal).ideal; }

/// Recomputes H~_l(Delta[W]) for a certificate on an independent code path.
inline bool certificate_holds(const MonomialIdeal& squarefree, const Certificate& c, unsigned p = 2) {
  const auto delta = stanley_reisner(squarefree);
  return reduced_betti_vector(induced_subcomplex(delta, c.w), p).at(c.l) != 0;
}

/// strip -> polarize -> (components) -> Hochster.
inline RegularityResult reg_monomial(const MonomialIdeal& ideal, const EngineOptions& opt = {}) {
  const auto pol = detail::hochster_polarization(ideal);
  const auto& ring = pol.ideal;
  auto solve = [&](const MonomialIdeal& part) {
    const auto fold = detail::make_fold(part, pol.map);
    return detail::hochster_folded(part, opt, fold ? &*fold : nullptr);
  };
  if (!opt.split_components) return solve(ring);
  const auto groups = detail::support_components(ring);
  if (groups.size() == 1) return solve(ring);
  // reg(I' + I'') = reg I' + reg I'' - 1 for disjoint supports; the join of
  // the witnesses carries homology in degree l' + l'' + 1.
  RegularityResult out;
  out.method = Method::component_sum;
  out.characteristic = opt.p;
  VertexSet w(ring.nvars());
  int value = 0, l = -1;
  std::vector<int> partial(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) partial[i] = static_cast<int>(detail::sub_ideal(ring, groups[i]).max_degree());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    RegularityResult part;
    try {
      part = solve(detail::sub_ideal(ring, groups[i]));
    } catch (const BudgetExceeded& e) {
      partial[i] = std::max(partial[i], e.lower_bound());
      int lb = 0;
      for (auto v : partial) lb += v;
      lb -= static_cast<int>(groups.size()) - 1;
      throw BudgetExceeded(lb, VertexSet(ring.nvars()), -1, "component " + std::to_string(i) + ": " + e.unexplored(),
                           out.evaluated + e.evaluated());
    }
    partial[i] = part.value;
    out.evaluated += part.evaluated;
    value += part.value;
    w |= part.certificate->w;
    l += part.certificate->l + 1;
  }
  out.value = value - static_cast<int>(groups.size()) + 1;
  out.certificate = detail::make_certificate(ring, w, l);
  return out;
}

/// reg(I(G)^s); cochordal graphs short-circuit to 2s when fast paths are on.
inline RegularityResult reg_edge_power(const Graph& g, unsigned s, const EngineOptions& opt = {}) {
  if (s == 0) throw ParameterError("reg_edge_power: s must be at least 1");
  if (!g.has_edges()) throw PreconditionError("reg_edge_power: the edge set is empty");
  if (opt.fast_paths && is_cochordal(g)) {
    RegularityResult out;
    out.value = static_cast<int>(2 * s);
    out.method = s == 1 ? Method::froeberg : Method::hhz_power;
    out.characteristic = opt.p;
    return out;
  }
  auto ideal = edge_ideal(g);
  return reg_monomial(s == 1 ? ideal : power(ideal, s), opt);
}

struct SequenceEntry {
  unsigned s = 0;
  std::optional<RegularityResult> result;
  std::optional<int> lower_bound;  ///< set when the budget ran out
  std::string note;
};

struct RegularitySequence {
  std::vector<SequenceEntry> entries;
  /// Smallest s with reg(I^{t+1}) - reg(I^t) = 2 for every computed t >= s;
  /// an observation over s <= s_max only.
  std::optional<unsigned> observed_stabilization;
};

inline RegularitySequence reg_sequence(const Graph& g, unsigned s_max, const EngineOptions& opt = {}) {
  if (s_max == 0) throw ParameterError("reg_sequence: s_max must be at least 1");
  if (!g.has_edges()) throw PreconditionError("reg_sequence: the edge set is empty");
  RegularitySequence seq;
  for (unsigned s = 1; s <= s_max; ++s) {
    SequenceEntry e;
    e.s = s;
    try {
      e.result = reg_edge_power(g, s, opt);
    } catch (const BudgetExceeded& ex) {
      e.lower_bound = ex.lower_bound();
      e.note = ex.what();
    }
    seq.entries.push_back(std::move(e));
  }
  const auto& es = seq.entries;
  for (std::size_t i = es.size(); i-- > 0;) {
    if (i + 1 == es.size()) continue;
    if (!es[i].result || !es[i + 1].result || es[i + 1].result->value - es[i].result->value != 2) break;
    seq.observed_stabilization = es[i].s;
  }
  return seq;
}

struct SesOptions {
  unsigned depth_limit = 64;
  std::size_t exact_vars = 12;  ///< supports this small are solved exactly
  /// Each node first tries an exact run under this subset cap; 0 disables.
  std::uint64_t node_subset_cap = 0;
};

namespace detail {

inline int ses_bound(const MonomialIdeal& ideal, const EngineOptions& opt, const SesOptions& so, unsigned depth) {
  const auto stripped = strip_linear_generators(ideal).ideal;
  if (stripped.is_zero()) return 1;  // generated by variables
  const auto& gens = stripped.generators();
  VertexSet support(stripped.nvars());
  for (const auto& g : gens) support |= g.support();
  const bool quadratic =
      std::all_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.degree() == 2 && m.is_squarefree(); });
  if (quadratic) {
    const auto sub = induced_subgraph(graph_of_quadratic_ideal(stripped), support);
    if (is_cochordal(sub.graph)) return 2;
  }
  EngineOptions exact = opt;
  exact.budget = Budget{};
  if (support.size() <= so.exact_vars || depth >= so.depth_limit) return reg_monomial(stripped, exact).value;
  if (so.node_subset_cap) {
    EngineOptions capped = opt;
    capped.budget = Budget{0.0, so.node_subset_cap};
    try {
      return reg_monomial(stripped, capped).value;
    } catch (const BudgetExceeded&) {
    }
  }
  // pivot: the variable in the most generators, lowest index on ties
  std::vector<std::size_t> hits(stripped.nvars(), 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < g.nvars(); ++v)
      if (g[v]) ++hits[v];
  const auto x = static_cast<std::size_t>(std::max_element(hits.begin(), hits.end()) - hits.begin());
  const auto xm = Monomial::variable(stripped.nvars(), x);
  const int with_colon = ses_bound(colon(stripped, xm), opt, so, depth + 1) + 1;
  auto plus = gens;
  plus.push_back(xm);
  auto sum = minimalize(std::move(plus), stripped.nvars());
  const int with_sum = ses_bound(sum, opt, so, depth + 1);
  return std::max(with_colon, with_sum);
}

}  // namespace detail

/// reg(I) <= max(reg(I : x) + 1, reg(I + (x))), applied recursively.
inline int ses_upper_bound(const MonomialIdeal& ideal, unsigned p = 2, unsigned depth_limit = 64,
                           const SesOptions& so_in = {}, const EngineOptions& opt_in = {}) {
  if (ideal.is_zero()) throw PreconditionError("ses_upper_bound: zero ideal");
  SesOptions so = so_in;
  so.depth_limit = depth_limit;
  EngineOptions opt = opt_in;
  opt.p = p;
  return detail::ses_bound(ideal, opt, so, 0);
}

}  // namespace regkit
