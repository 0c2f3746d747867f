#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regkit/complex.hpp"
#include "regkit/edge_ideal.hpp"
#include "regkit/errors.hpp"
#include "regkit/graph.hpp"
#include "regkit/homology.hpp"
#include "regkit/monomial.hpp"
#include "regkit/regularity.hpp"

namespace regkit {

inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

/// A complex with its 1-skeleton and a provenance tag.
struct LabeledComplex {
  SimplicialComplex complex;
  std::string provenance;
  Graph skeleton;  ///< edges = 2-element faces
  std::string checksum;  ///< sha256 of the complex text body
};

inline LabeledComplex make_labeled(SimplicialComplex k, std::string provenance) {
  if (provenance.empty()) throw PreconditionError("provenance must be nonempty");
  LabeledComplex out;
  out.skeleton = one_skeleton(k);
  out.checksum = sha256_hex(format_complex(k));
  out.complex = std::move(k);
  out.provenance = std::move(provenance);
  return out;
}

/// Complex text preceded by "# provenance:" and "# sha256:" headers.
inline std::string format_labeled_complex(const LabeledComplex& lc) {
  return "# provenance: " + lc.provenance + "\n# sha256: " + lc.checksum + "\n" + format_complex(lc.complex);
}

/// Parses the labeled format; a "# sha256:" header must match the body.
inline LabeledComplex parse_labeled_complex(std::string_view text) {
  std::string provenance, sum, body;
  for (auto line : detail::split_lines(text)) {
    const auto t = detail::trim(line);
    if (t.starts_with("# provenance:")) {
      provenance = std::string(detail::trim(t.substr(13)));
    } else if (t.starts_with("# sha256:")) {
      sum = std::string(detail::trim(t.substr(9)));
    } else if (!t.empty() && t.front() != '#') {
      body += std::string(t) + "\n";
    }
  }
  if (!sum.empty() && sha256_hex(body) != sum)
    throw ChecksumError("complex data does not match its sha256 header (expected " + sum + ", got " + sha256_hex(body) + ")");
  auto lc = make_labeled(parse_complex(body), provenance.empty() ? "unlabeled" : provenance);
  return lc;
}

namespace detail {
inline constexpr std::string_view kDunceHat8 =
    "# provenance: classical 8-vertex dunce hat, 17 triangles\n"
    "# sha256: d3ddcb9a444618b13ba0793445c74680b8be10bddecf453f3c320110140d6e57\n"
    "n 8\n"
    "1 5\n3 6\n4 6\n4 7\n"
    "0 1 2\n0 1 4\n0 2 6\n0 2 7\n0 3 4\n0 3 5\n0 3 7\n0 5 6\n0 5 7\n"
    "1 2 3\n1 3 7\n1 6 7\n2 3 4\n2 3 5\n2 4 5\n2 5 7\n2 6 7\n";
}  // namespace detail

/// 8-vertex, 17-triangle dunce hat; checksum-verified, then checked to be
/// pure 2-dimensional and acyclic over GF(2) and GF(3).
inline LabeledComplex dunce_hat_complex() {
  auto lc = parse_labeled_complex(detail::kDunceHat8);
  const auto& k = lc.complex;
  if (k.dimension() != 2) throw ChecksumError("dunce hat data is not 2-dimensional");
  for (const auto& f : k.facets())
    if (f.size() != 3) throw ChecksumError("dunce hat data is not pure");
  for (unsigned p : {2U, 3U})
    if (!reduced_betti_vector(k, p).is_zero()) throw ChecksumError("dunce hat data has nonzero homology");
  return lc;
}

struct FlagNoSquare {
  bool flag = false;
  bool no_square = false;
  [[nodiscard]] bool ok() const { return flag && no_square; }
};

/// flag: every minimal non-face over the vertex set has two elements;
/// no_square: the 1-skeleton has no induced 4-cycle.
inline FlagNoSquare validate_flag_no_square(const LabeledComplex& lc) {
  FlagNoSquare out;
  const auto verts = lc.complex.vertex_set();
  out.flag = !lc.complex.is_void() && std::all_of(lc.complex.min_nonfaces().begin(), lc.complex.min_nonfaces().end(),
                                                  [&](const VertexSet& nf) {
                                                    return nf.size() == 2 || (nf.size() == 1 && !nf.is_subset_of(verts));
                                                  });
  out.no_square = !has_induced_c4(induced_subgraph(lc.skeleton, verts).graph);
  return out;
}

namespace detail {

/// One subdivision round of a complex of dimension <= 2. Each edge gets a
/// midpoint; each triangle abc gets inner vertices U_a, U_b, U_c and splits
/// into 10 triangles: {a, M_ab, U_a}, {a, U_a, M_ac} per corner,
/// {M_ab, U_a, U_b} per side, and {U_a, U_b, U_c}.
inline SimplicialComplex pentagonal_round(const SimplicialComplex& k) {
  const std::size_t n = k.num_vertices();
  const auto edges = k.faces(1);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mid;
  std::size_t next = n;
  for (const auto& e : edges) {
    const auto vs = e.elements();
    mid[{vs[0], vs[1]}] = next++;
  }
  const auto facets = k.facets();
  std::vector<std::vector<std::size_t>> tris;
  std::vector<std::vector<std::size_t>> out_facets;
  for (const auto& f : facets) {
    const auto vs = f.elements();
    if (vs.size() == 3) {
      tris.push_back(vs);
    } else if (vs.size() == 2) {
      const auto m = mid.at({vs[0], vs[1]});
      out_facets.push_back({vs[0], m});
      out_facets.push_back({vs[1], m});
    } else if (vs.size() == 1) {
      out_facets.push_back(vs);
    } else if (vs.size() > 3) {
      throw PreconditionError("subdivision round needs a complex of dimension <= 2");
    }
  }
  for (const auto& t : tris) {
    const std::size_t u[3] = {next, next + 1, next + 2};
    next += 3;
    auto m = [&](std::size_t i, std::size_t j) { return mid.at({std::min(t[i], t[j]), std::max(t[i], t[j])}); };
    for (std::size_t x = 0; x < 3; ++x) {
      const std::size_t y = (x + 1) % 3, z = (x + 2) % 3;
      out_facets.push_back({t[x], m(x, y), u[x]});
      out_facets.push_back({t[x], u[x], m(x, z)});
    }
    for (std::size_t x = 0; x < 3; ++x) {
      const std::size_t y = (x + 1) % 3;
      out_facets.push_back({m(x, y), u[x], u[y]});
    }
    out_facets.push_back({u[0], u[1], u[2]});
  }
  std::vector<VertexSet> fs;
  for (const auto& f : out_facets) fs.emplace_back(next, f);
  return SimplicialComplex::from_facets(next, fs);
}

}  // namespace detail

struct SubdivisionResult {
  LabeledComplex complex;
  unsigned rounds = 0;
  bool success = false;  ///< validators pass on `complex`
  bool homology_preserved = true;
};

/// Subdivision rounds until validate_flag_no_square passes or max_rounds is hit.
/// Every round is checked to preserve reduced homology over GF(2) and GF(3).
inline SubdivisionResult flag_no_square_subdivide(const LabeledComplex& lc, unsigned max_rounds = 4) {
  if (lc.complex.is_void() || lc.complex.dimension() != 2)
    throw PreconditionError("flag_no_square_subdivide: complex must be 2-dimensional");
  SubdivisionResult out;
  out.complex = lc;
  const auto h2 = reduced_betti_vector(lc.complex, 2), h3 = reduced_betti_vector(lc.complex, 3);
  while (!validate_flag_no_square(out.complex).ok() && out.rounds < max_rounds) {
    auto next = detail::pentagonal_round(out.complex.complex);
    ++out.rounds;
    if (reduced_betti_vector(next, 2) != h2 || reduced_betti_vector(next, 3) != h3) out.homology_preserved = false;
    out.complex = make_labeled(std::move(next), lc.provenance + " / pentagonal round " + std::to_string(out.rounds));
  }
  if (!out.homology_preserved) throw InternalError("subdivision changed the homology");
  out.success = validate_flag_no_square(out.complex).ok();
  return out;
}

struct ColonProbe {
  Edge edge;
  int lower_bound = 0;                  ///< from the link certificate in Delta'
  std::optional<VertexSet> lower_witness;
  std::optional<int> computed_upper;    ///< topological bound or exact engine value
  int theorem_upper = 0;                ///< reg(I^2 : ab) <= reg I(G)
  std::string status;                   ///< "confirmed", "theorem", "partial"
};

struct ProbeOptions {
  EngineOptions engine;
  std::size_t edge_samples = 20;
  std::uint64_t seed = 0;
  double colon_seconds = 10.0;  ///< per sampled edge, when the bounds do not meet
  std::size_t power_generator_cap = 20000;
};

struct ProbeReport {
  std::string checksum;
  std::size_t vertices = 0;
  std::size_t facets = 0;
  FlagNoSquare validators;
  // reg I(G)
  int reg_lower = 0;
  std::optional<Certificate> reg_lower_certificate;  ///< vertex link, l = 1
  int reg_upper = 0;                                  ///< topological bound
  std::optional<RegularityResult> reg_exact;
  std::string reg_status;  ///< "exact" or "partial"
  std::string reg_note;
  std::vector<ColonProbe> colons;
  // reg I(G)^2
  int square_lower = 4;
  int square_upper = 0;  ///< reg I(G) + 2, or the exact value
  std::optional<int> square_exact;
  std::string square_status;  ///< "exact" or "partial"
  std::string square_note;
};

namespace detail {

/// First vertex (ascending) whose link in the flag complex `k` carries H~_1,
/// as an induced subcomplex on W = Vr(link).
inline std::optional<Certificate> link_certificate(const SimplicialComplex& k, const Graph& skeleton, unsigned p,
                                                   std::optional<std::size_t> only = std::nullopt) {
  for (std::size_t v = 0; v < k.num_vertices(); ++v) {
    if (only && v != *only) continue;
    if (!k.is_vertex(v)) continue;
    const VertexSet w = skeleton.neighbors(v);
    if (reduced_betti_vector(induced_subcomplex(k, w), p).at(1) != 0) {
      Certificate c{w, 1, {}};
      w.for_each([&](std::size_t u) { c.names.push_back("x" + std::to_string(u)); });
      return c;
    }
  }
  return std::nullopt;
}

/// Deterministic sample of `count` items from 0..n-1 (partial Fisher-Yates).
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  count = std::min(count, n);
  for (std::size_t i = 0; i < count; ++i) std::swap(idx[i], idx[i + static_cast<std::size_t>(rng() % (n - i))]);
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace detail

/// The dunce-hat experiment on a flag-no-square acyclic 2-complex K:
/// H = 1-skeleton, G = H^c, Delta = cl(H) = K.
inline ProbeReport dunce_hat_probe(const LabeledComplex& lc, const ProbeOptions& po = {}) {
  ProbeReport rep;
  rep.checksum = lc.checksum;
  rep.validators = validate_flag_no_square(lc);
  if (!rep.validators.ok()) throw PreconditionError("dunce_hat_probe: complex is not flag-no-square");
  const auto& k = lc.complex;
  if (!reduced_betti_vector(k, po.engine.p).is_zero()) throw PreconditionError("dunce_hat_probe: homology does not vanish");
  rep.vertices = k.vertex_set().size();
  rep.facets = k.facets().size();
  const Graph g = complement(lc.skeleton);
  if (!g.has_edges()) throw PreconditionError("dunce_hat_probe: the 1-skeleton is complete");
  const auto ideal = edge_ideal(g);

  // reg I(G): vertex-link lower bound against the topological upper bound
  const auto cert = detail::link_certificate(k, lc.skeleton, po.engine.p);
  rep.reg_lower = cert ? 3 : 2;
  if (cert) rep.reg_lower_certificate = *cert;
  rep.reg_upper = hochster_upper_bound(ideal, po.engine.p);
  if (cert && rep.reg_upper == rep.reg_lower) {
    RegularityResult r;
    r.value = rep.reg_lower;
    r.certificate = detail::make_certificate(ideal, cert->w, cert->l);
    r.characteristic = po.engine.p;
    rep.reg_exact = r;
    rep.reg_status = "exact";
    rep.reg_note = "link certificate meets the topological upper bound";
  } else {
    try {
      rep.reg_exact = reg_squarefree_hochster(ideal, po.engine);
      rep.reg_status = "exact";
    } catch (const BudgetExceeded& e) {
      rep.reg_lower = std::max(rep.reg_lower, e.lower_bound());
      rep.reg_status = "partial";
      rep.reg_note = e.what();
    }
  }
  const int reg_value = rep.reg_exact ? rep.reg_exact->value : rep.reg_lower;

  // colon checks on sampled edges of G
  const auto edges = g.edges();
  for (auto i : detail::sample_indices(edges.size(), po.edge_samples, po.seed)) {
    const auto [a, b] = edges[i];
    ColonProbe cp;
    cp.edge = edges[i];
    cp.theorem_upper = reg_value;
    // link_a(Delta') = link_a(Delta), an induced subcomplex of Delta'
    const Graph h_prime = complement(suspension_graph(g, a, b));
    if (auto c = detail::link_certificate(clique_complex(h_prime), h_prime, po.engine.p, a)) {
      cp.lower_bound = 3;
      cp.lower_witness = c->w;
    } else {
      cp.lower_bound = 2;
    }
    const auto colon_ring = hochster_ring(colon_square_formula(g, a, b));
    cp.computed_upper = hochster_upper_bound(colon_ring, po.engine.p);
    if (*cp.computed_upper > cp.lower_bound) {
      try {
        EngineOptions eo = po.engine;
        eo.budget = Budget{po.colon_seconds, 0};
        cp.computed_upper = reg_monomial(colon_ring, eo).value;
      } catch (const BudgetExceeded&) {
      }
    }
    if (*cp.computed_upper == cp.lower_bound)
      cp.status = "confirmed";
    else if (rep.reg_exact && cp.theorem_upper == cp.lower_bound)
      cp.status = "theorem";
    else
      cp.status = "partial";
    rep.colons.push_back(std::move(cp));
  }

  // reg I(G)^2: bracket [4, reg I(G) + 2], exact when small enough
  rep.square_upper = reg_value + 2;
  const std::size_t m = ideal.num_generators();
  if (m * (m + 1) / 2 > po.power_generator_cap) {
    rep.square_status = "partial";
    rep.square_note = "I(G)^2 has up to " + std::to_string(m * (m + 1) / 2) + " generators; not attempted";
  } else {
    try {
      const auto r = reg_edge_power(g, 2, po.engine);
      rep.square_exact = r.value;
      rep.square_lower = rep.square_upper = r.value;
      rep.square_status = "exact";
    } catch (const BudgetExceeded& e) {
      rep.square_lower = std::max(rep.square_lower, e.lower_bound());
      rep.square_status = "partial";
      rep.square_note = e.what();
    }
  }
  if (!rep.reg_exact) rep.square_note += (rep.square_note.empty() ? "" : "; ") + std::string("upper end uses the reg I(G) lower bound");
  return rep;
}

}  // namespace regkit
