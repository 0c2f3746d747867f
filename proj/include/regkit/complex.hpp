#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "regkit/bits.hpp"
#include "regkit/errors.hpp"
#include "regkit/graph.hpp"
#include "regkit/graph_io.hpp"
#include "regkit/monomial.hpp"

namespace regkit {

/// Simplicial complex on vertices 0..n-1, stored by its minimal non-faces.
/// A set is a face iff it contains no minimal non-face. The void complex
/// (not even the empty face) is a separate flag.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Full simplex on n vertices.
  explicit SimplicialComplex(std::size_t n) : n_(n) {}

  static SimplicialComplex from_nonfaces(std::size_t n, std::vector<VertexSet> nonfaces) {
    SimplicialComplex k(n);
    for (auto& f : nonfaces) {
      if (f.universe() != n) f = f.resized(n);
      if (f.empty()) return void_complex(n);
    }
    k.nonfaces_ = minimal_sets(std::move(nonfaces));
    return k;
  }

  static SimplicialComplex void_complex(std::size_t n) {
    SimplicialComplex k(n);
    k.void_ = true;
    return k;
  }

  /// {emptyset}: no vertices at all.
  static SimplicialComplex empty_complex() { return SimplicialComplex(0); }

  /// Complex generated by `facets`; vertices in no facet become non-faces.
  static SimplicialComplex from_facets(std::size_t n, const std::vector<VertexSet>& facets);

  [[nodiscard]] std::size_t num_vertices() const { return n_; }
  [[nodiscard]] const std::vector<VertexSet>& min_nonfaces() const { return nonfaces_; }
  [[nodiscard]] bool is_void() const { return void_; }
  /// True for {emptyset}: not void and no vertex is a face.
  [[nodiscard]] bool is_empty_complex() const {
    if (void_) return false;
    for (std::size_t v = 0; v < n_; ++v)
      if (is_vertex(v)) return false;
    return true;
  }

  [[nodiscard]] bool is_face(const VertexSet& f) const {
    if (void_) return false;
    return std::none_of(nonfaces_.begin(), nonfaces_.end(), [&](const VertexSet& nf) { return nf.is_subset_of(f); });
  }
  [[nodiscard]] bool is_vertex(std::size_t v) const {
    if (void_ || v >= n_) return false;
    return std::none_of(nonfaces_.begin(), nonfaces_.end(),
                        [&](const VertexSet& nf) { return nf.size() == 1 && nf.contains(v); });
  }
  /// Vertices v with {v} a face.
  [[nodiscard]] VertexSet vertex_set() const {
    VertexSet s(n_);
    for (std::size_t v = 0; v < n_; ++v)
      if (is_vertex(v)) s.insert(v);
    return s;
  }

  /// Faces with `dim + 1` vertices in lexicographic order. dim = -1 yields {emptyset}.
  [[nodiscard]] std::vector<VertexSet> faces(int dim) const {
    std::vector<VertexSet> out;
    if (void_ || dim < -1) return out;
    if (dim == -1) {
      out.emplace_back(n_);
      return out;
    }
    const auto by_max = nonfaces_by_max();
    VertexSet cur(n_);
    extend(cur, 0, static_cast<std::size_t>(dim + 1), by_max, [&](const VertexSet& f) { out.push_back(f); });
    return out;
  }

  /// Every face grouped by dimension; index 0 holds the empty face.
  [[nodiscard]] std::vector<std::vector<VertexSet>> all_faces() const {
    std::vector<std::vector<VertexSet>> out;
    if (void_) return out;
    out.emplace_back(1, VertexSet(n_));
    const auto by_max = nonfaces_by_max();
    VertexSet cur(n_);
    walk(cur, 0, by_max, out);
    return out;
  }

  /// -1 for {emptyset}; throws for the void complex.
  [[nodiscard]] int dimension() const {
    if (void_) throw PreconditionError("the void complex has no dimension");
    return static_cast<int>(all_faces().size()) - 2;
  }

  [[nodiscard]] std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    const auto all = all_faces();
    for (std::size_t i = 1; i < all.size(); ++i) f.push_back(all[i].size());
    return f;
  }

  /// Maximal faces in lexicographic order of their sorted vertex lists.
  [[nodiscard]] std::vector<VertexSet> facets() const {
    std::vector<VertexSet> out;
    const auto all = all_faces();
    for (std::size_t d = 0; d < all.size(); ++d) {
      for (const auto& f : all[d]) {
        bool maximal = true;
        for (std::size_t v = 0; v < n_ && maximal; ++v) {
          if (f.contains(v)) continue;
          auto g = f;
          g.insert(v);
          if (is_face(g)) maximal = false;
        }
        if (maximal) out.push_back(f);
      }
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.elements() < b.elements(); });
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.n_ != b.n_ || a.void_ != b.void_) return false;
    auto x = a.nonfaces_, y = b.nonfaces_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  static std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (auto& s : sets) {
      bool redundant = false;
      for (const auto& k : kept)
        if (k.is_subset_of(s)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(s));
    }
    return kept;
  }

 private:
  // nonfaces grouped by their largest vertex, with that vertex removed
  [[nodiscard]] std::vector<std::vector<VertexSet>> nonfaces_by_max() const {
    std::vector<std::vector<VertexSet>> by_max(n_);
    for (const auto& nf : nonfaces_) {
      auto e = nf.elements();
      auto rest = nf;
      rest.erase(e.back());
      by_max[e.back()].push_back(std::move(rest));
    }
    return by_max;
  }

  template <class Emit>
  void extend(VertexSet& cur, std::size_t from, std::size_t want, const std::vector<std::vector<VertexSet>>& by_max,
              Emit&& emit) const {
    if (want == 0) {
      emit(cur);
      return;
    }
    for (std::size_t v = from; v + want <= n_; ++v) {
      if (!addable(cur, v, by_max)) continue;
      cur.insert(v);
      extend(cur, v + 1, want - 1, by_max, emit);
      cur.erase(v);
    }
  }

  void walk(VertexSet& cur, std::size_t from, const std::vector<std::vector<VertexSet>>& by_max,
            std::vector<std::vector<VertexSet>>& out) const {
    for (std::size_t v = from; v < n_; ++v) {
      if (!addable(cur, v, by_max)) continue;
      cur.insert(v);
      const auto k = cur.size();
      if (out.size() <= k) out.resize(k + 1);
      out[k].push_back(cur);
      walk(cur, v + 1, by_max, out);
      cur.erase(v);
    }
  }

  static bool addable(const VertexSet& cur, std::size_t v, const std::vector<std::vector<VertexSet>>& by_max) {
    for (const auto& rest : by_max[v])
      if (rest.is_subset_of(cur)) return false;
    return true;
  }

  std::size_t n_ = 0;
  std::vector<VertexSet> nonfaces_;
  bool void_ = false;
};

inline SimplicialComplex SimplicialComplex::from_facets(std::size_t n, const std::vector<VertexSet>& facets) {
  if (facets.empty()) return void_complex(n);
  std::vector<VertexSet> fs;
  for (const auto& f : facets) fs.push_back(f.universe() == n ? f : f.resized(n));
  auto in_some_facet = [&](const VertexSet& s) {
    return std::any_of(fs.begin(), fs.end(), [&](const VertexSet& f) { return s.is_subset_of(f); });
  };
  // A minimal non-face has every codimension-1 subset a face, so candidates
  // grow from faces one vertex at a time.
  std::vector<VertexSet> nonfaces;
  std::set<VertexSet> layer{VertexSet(n)};
  while (!layer.empty()) {
    std::set<VertexSet> next;
    for (const auto& f : layer) {
      const std::size_t start = f.empty() ? 0 : f.elements().back() + 1;
      for (std::size_t v = start; v < n; ++v) {
        auto g = f;
        g.insert(v);
        if (in_some_facet(g)) {
          next.insert(g);
          continue;
        }
        bool minimal = true;
        g.for_each([&](std::size_t u) {
          if (!minimal || u == v) return;
          auto h = g;
          h.erase(u);
          if (!in_some_facet(h)) minimal = false;
        });
        if (minimal) nonfaces.push_back(g);
      }
    }
    layer = std::move(next);
  }
  return from_nonfaces(n, std::move(nonfaces));
}

/// Stanley-Reisner complex: minimal non-faces are the generator supports.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  std::vector<VertexSet> nf;
  for (const auto& g : ideal.generators()) {
    if (!g.is_squarefree()) throw PreconditionError("stanley_reisner: generator " + format_monomial(g) + " is not squarefree");
    if (g.degree() == 0) throw PreconditionError("stanley_reisner: unit ideal");
    nf.push_back(g.support());
  }
  return SimplicialComplex::from_nonfaces(ideal.nvars(), std::move(nf));
}

/// Inverse of stanley_reisner.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& k) {
  if (k.is_void()) throw PreconditionError("the void complex has the unit ideal");
  std::vector<Monomial> gens;
  for (const auto& nf : k.min_nonfaces()) {
    Monomial m(k.num_vertices());
    nf.for_each([&](std::size_t v) { m.raise(v, 1); });
    gens.push_back(std::move(m));
  }
  return minimalize(std::move(gens), k.num_vertices());
}

/// cl(H): the faces are the cliques of H.
inline SimplicialComplex clique_complex(const Graph& h) {
  std::vector<VertexSet> nf;
  const std::size_t n = h.order();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!h.has_edge(u, v)) nf.push_back(VertexSet(n, {u, v}));
  return SimplicialComplex::from_nonfaces(n, std::move(nf));
}

/// 1-skeleton over all n vertex slots.
inline Graph one_skeleton(const SimplicialComplex& k) {
  Graph g(k.num_vertices());
  for (const auto& e : k.faces(1)) {
    const auto vs = e.elements();
    g.add_edge(vs[0], vs[1]);
  }
  return g;
}

/// Delta[W] reindexed onto 0..|W|-1 in ascending order of W.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const VertexSet& w) {
  const auto idx = w.elements();
  if (k.is_void()) return SimplicialComplex::void_complex(idx.size());
  std::vector<std::size_t> pos(k.num_vertices(), k.num_vertices());
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
  std::vector<VertexSet> nf;
  for (const auto& f : k.min_nonfaces()) {
    if (!f.is_subset_of(w)) continue;
    VertexSet g(idx.size());
    f.for_each([&](std::size_t v) { g.insert(pos[v]); });
    nf.push_back(std::move(g));
  }
  return SimplicialComplex::from_nonfaces(idx.size(), std::move(nf));
}

namespace detail {
inline void require_vertex(const SimplicialComplex& k, std::size_t d, const char* op) {
  if (!k.is_vertex(d)) throw PreconditionError(std::string(op) + ": {" + std::to_string(d) + "} is not a face");
}
}  // namespace detail

/// Faces tau with tau u {d} a face; same vertex indices.
inline SimplicialComplex closed_star(const SimplicialComplex& k, std::size_t d) {
  detail::require_vertex(k, d, "closed_star");
  std::vector<VertexSet> nf;
  for (auto f : k.min_nonfaces()) {
    f.erase(d);
    nf.push_back(std::move(f));
  }
  return SimplicialComplex::from_nonfaces(k.num_vertices(), std::move(nf));
}

/// Faces tau with d not in tau and tau u {d} a face; same vertex indices.
inline SimplicialComplex link(const SimplicialComplex& k, std::size_t d) {
  detail::require_vertex(k, d, "link");
  std::vector<VertexSet> nf;
  for (auto f : k.min_nonfaces()) {
    f.erase(d);
    nf.push_back(std::move(f));
  }
  nf.push_back(VertexSet(k.num_vertices(), {d}));
  return SimplicialComplex::from_nonfaces(k.num_vertices(), std::move(nf));
}

/// Faces avoiding d; same vertex indices.
inline SimplicialComplex antistar(const SimplicialComplex& k, std::size_t d) {
  detail::require_vertex(k, d, "antistar");
  auto nf = k.min_nonfaces();
  nf.push_back(VertexSet(k.num_vertices(), {d}));
  return SimplicialComplex::from_nonfaces(k.num_vertices(), std::move(nf));
}

/// Vertices of k2 are shifted by k1.num_vertices().
inline SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const std::size_t n1 = k1.num_vertices(), n = n1 + k2.num_vertices();
  if (k1.is_void() || k2.is_void()) return SimplicialComplex::void_complex(n);
  std::vector<VertexSet> nf;
  for (const auto& f : k1.min_nonfaces()) nf.push_back(f.resized(n));
  for (const auto& f : k2.min_nonfaces()) {
    VertexSet g(n);
    f.for_each([&](std::size_t v) { g.insert(n1 + v); });
    nf.push_back(std::move(g));
  }
  return SimplicialComplex::from_nonfaces(n, std::move(nf));
}

/// Join with two new points a = n, b = n + 1 and the single non-face {a, b}.
inline SimplicialComplex suspension(const SimplicialComplex& k) {
  return join(k, SimplicialComplex::from_nonfaces(2, {VertexSet(2, {0, 1})}));
}

/// Lowest vertex lying in every facet, if any.
inline std::optional<std::size_t> is_cone(const SimplicialComplex& k) {
  if (k.is_void()) throw PreconditionError("is_cone: void complex");
  VertexSet used(k.num_vertices());
  for (const auto& f : k.min_nonfaces()) used |= f;
  return used.complement().first();
}

/// Face set of `k` as sorted vertex-index lists.
inline std::set<std::vector<std::size_t>> face_set(const SimplicialComplex& k) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& layer : k.all_faces())
    for (const auto& f : layer) out.insert(f.elements());
  return out;
}

/// Checks Delta' = Delta[A] u Delta[B] u (u_{d in D} {d} * Delta[C n Vr(St_d)])
/// face by face, where Delta = cl(G^c), Delta' = cl(G'^c), A and B are the
/// vertex sets of the closed stars of a and b, C = A n B, D = V - (A u B).
inline bool verify_suspension_decomposition(const Graph& g, std::size_t a, std::size_t b) {
  const Graph gp = suspension_graph(g, a, b);
  const std::size_t n = g.order();
  const auto delta = clique_complex(complement(g));
  const auto delta_p = clique_complex(complement(gp));
  auto star_vertices = [&](std::size_t v) {
    VertexSet s(n);
    for (const auto& f : closed_star(delta, v).vertex_set().elements()) s.insert(f);
    return s;
  };
  const VertexSet A = star_vertices(a), B = star_vertices(b);
  const VertexSet C = A & B;
  const VertexSet D = delta.vertex_set() - (A | B);

  std::set<std::vector<std::size_t>> glued;
  auto add_faces_within = [&](const VertexSet& w, const std::optional<std::size_t>& apex) {
    // Delta is flag, so Delta[w] = faces of Delta inside w.
    for (const auto& layer : delta.all_faces())
      for (const auto& f : layer) {
        if (!f.is_subset_of(w)) continue;
        glued.insert(f.elements());
        if (apex) {
          auto h = f;
          h.insert(*apex);
          glued.insert(h.elements());
        }
      }
  };
  add_faces_within(A, std::nullopt);
  add_faces_within(B, std::nullopt);
  for (auto d : D.elements()) add_faces_within(C & star_vertices(d), d);
  return glued == face_set(delta_p);
}

/// Complex text: "n <count>", then one minimal non-face per line.
inline std::string format_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "n " << k.num_vertices() << '\n';
  if (k.is_void()) {
    os << "void\n";
    return os.str();
  }
  for (const auto& f : k.min_nonfaces()) {
    bool first = true;
    f.for_each([&](std::size_t v) {
      os << (first ? "" : " ") << v;
      first = false;
    });
    os << '\n';
  }
  return os.str();
}

inline SimplicialComplex parse_complex(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::vector<std::size_t>> raw;
  bool is_void = false;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = detail::split_ws(detail::trim(line));
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (n || toks.size() != 2) throw ParseError("line " + std::to_string(ln + 1) + ": malformed header");
      n = detail::parse_index(toks[1], ln + 1);
      if (*n > kMaxVertices) throw ParseError("line " + std::to_string(ln + 1) + ": more than 1024 vertices");
      continue;
    }
    if (!n) throw ParseError("line " + std::to_string(ln + 1) + ": missing \"n <count>\" header");
    if (toks.size() == 1 && toks[0] == "void") {
      is_void = true;
      continue;
    }
    std::vector<std::size_t> face;
    for (auto t : toks) {
      const auto v = detail::parse_index(t, ln + 1);
      if (v >= *n) throw ParseError("line " + std::to_string(ln + 1) + ": vertex " + std::to_string(v) + " out of range");
      face.push_back(v);
    }
    raw.push_back(std::move(face));
  }
  if (!n) throw ParseError("line 1: missing \"n <count>\" header");
  if (is_void) return SimplicialComplex::void_complex(*n);
  std::vector<VertexSet> nf;
  for (const auto& f : raw) nf.emplace_back(*n, f);
  return SimplicialComplex::from_nonfaces(*n, std::move(nf));
}

}  // namespace regkit
