#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regkit/bits.hpp"
#include "regkit/errors.hpp"
#include "regkit/graph_io.hpp"

namespace regkit {

using Exponent = std::uint8_t;

/// Dense exponent vector over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1) {
    Monomial m(nvars);
    m.exps_.at(i) = e;
    return m;
  }
  static Monomial product_of(std::size_t nvars, std::initializer_list<std::size_t> vars) {
    Monomial m(nvars);
    for (auto v : vars) m.raise(v, 1);
    return m;
  }

  [[nodiscard]] std::size_t nvars() const { return exps_.size(); }
  [[nodiscard]] Exponent operator[](std::size_t i) const { return exps_[i]; }
  [[nodiscard]] const std::vector<Exponent>& exponents() const { return exps_; }

  void raise(std::size_t i, unsigned by) {
    const unsigned e = exps_.at(i) + by;
    if (e > std::numeric_limits<Exponent>::max()) throw ParameterError("exponent exceeds 255");
    exps_[i] = static_cast<Exponent>(e);
  }

  [[nodiscard]] unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  [[nodiscard]] bool is_one() const { return degree() == 0; }
  [[nodiscard]] bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  [[nodiscard]] bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  [[nodiscard]] VertexSet support() const {
    VertexSet s(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i]) s.insert(i);
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.raise(i, b.exps_[i]);
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return m;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return m;
  }
  /// a / b with exponents clipped at zero, i.e. a / gcd(a, b).
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps_.size(); ++i)
      m.exps_[i] = a.exps_[i] > b.exps_[i] ? static_cast<Exponent>(a.exps_[i] - b.exps_[i]) : Exponent{0};
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Generator order used everywhere: degree ascending, then lex descending
  /// (x0 > x1 > ...).
  friend bool canonical_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps_ > b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

/// Monomial ideal stored by its minimal generators in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const std::vector<Monomial>& generators() const { return gens_; }
  [[nodiscard]] std::size_t num_generators() const { return gens_.size(); }
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }
  [[nodiscard]] bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
  }
  [[nodiscard]] unsigned max_degree() const {
    unsigned d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }
  [[nodiscard]] bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  [[nodiscard]] const std::vector<std::string>& var_names() const { return names_; }
  void set_var_names(std::vector<std::string> names) { names_ = std::move(names); }
  [[nodiscard]] std::string var_name(std::size_t i) const {
    return i < names_.size() ? names_[i] : "x" + std::to_string(i);
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars);

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
  std::vector<std::string> names_;
};

/// Divisibility-minimal antichain of `gens`, deduplicated, in canonical order.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw PreconditionError("minimalize: monomials over different rings");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return canonical_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out(nvars);
  // A divisor has degree <= the multiple's, so scanning in degree order
  // against the kept prefix is enough.
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : out.gens_) {
      if (k.degree() >= g.degree()) break;
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  return out;
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw PreconditionError("ideal_sum: different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  auto out = minimalize(std::move(gens), a.nvars());
  out.set_var_names(a.var_names());
  return out;
}

/// I^s by enumerating multisets of s generators, minimalized once.
inline MonomialIdeal power(const MonomialIdeal& ideal, unsigned s) {
  if (s == 0) throw ParameterError("power: s must be at least 1");
  const auto& g = ideal.generators();
  const std::size_t k = g.size();
  std::vector<Monomial> products;
  if (k > 0) {
    std::vector<std::size_t> idx(s, 0);
    while (true) {
      Monomial m(ideal.nvars());
      for (auto i : idx) m = m * g[i];
      products.push_back(std::move(m));
      // next non-decreasing index tuple
      std::size_t p = s;
      while (p > 0 && idx[p - 1] == k - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t q = p; q < s; ++q) idx[q] = idx[p - 1];
    }
  }
  auto out = minimalize(std::move(products), ideal.nvars());
  out.set_var_names(ideal.var_names());
  return out;
}

/// (I : m) generated by g / gcd(g, m).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != ideal.nvars()) throw PreconditionError("colon: monomial over a different ring");
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(quotient(g, m));
  auto out = minimalize(std::move(gens), ideal.nvars());
  out.set_var_names(ideal.var_names());
  return out;
}

/// Bijection between (variable, copy) pairs and polarized variable indices.
/// Copy 1 of variable i is variable i itself; extra copies are appended in
/// variable-major order.
class PolarizationMap {
 public:
  PolarizationMap() = default;
  explicit PolarizationMap(const std::vector<unsigned>& max_exponent) {
    const std::size_t n = max_exponent.size();
    forward_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      forward_[i].push_back(i);
      back_.emplace_back(i, 1U);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned c = 2; c <= max_exponent[i]; ++c) {
        forward_[i].push_back(back_.size());
        back_.emplace_back(i, c);
      }
  }

  [[nodiscard]] std::size_t original_vars() const { return forward_.size(); }
  [[nodiscard]] std::size_t polarized_vars() const { return back_.size(); }
  /// `copy` is 1-based.
  [[nodiscard]] std::size_t forward(std::size_t var, unsigned copy) const { return forward_.at(var).at(copy - 1); }
  [[nodiscard]] std::pair<std::size_t, unsigned> back(std::size_t polarized) const { return back_.at(polarized); }

 private:
  std::vector<std::vector<std::size_t>> forward_;
  std::vector<std::pair<std::size_t, unsigned>> back_;
};

/// Display name of copy `copy` of a variable named `base`: "x", "x'", "x^(3)".
inline std::string whisker_name(const std::string& base, unsigned copy) {
  if (copy <= 1) return base;
  if (copy == 2) return base + "'";
  return base + "^(" + std::to_string(copy) + ")";
}

struct Polarization {
  MonomialIdeal ideal;
  PolarizationMap map;
};

inline Polarization polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<unsigned> max_exp(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max<unsigned>(max_exp[i], g[i]);
  Polarization out{MonomialIdeal{}, PolarizationMap(max_exp)};
  const std::size_t np = out.map.polarized_vars();
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) {
    Monomial m(np);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned c = 1; c <= g[i]; ++c) m.raise(out.map.forward(i, c), 1);
    gens.push_back(std::move(m));
  }
  out.ideal = minimalize(std::move(gens), np);
  std::vector<std::string> names(np);
  for (std::size_t v = 0; v < np; ++v) {
    auto [var, copy] = out.map.back(v);
    names[v] = whisker_name(ideal.var_name(var), copy);
  }
  out.ideal.set_var_names(std::move(names));
  return out;
}

/// Inverse of polarization for a single generator.
inline Monomial depolarize(const Monomial& m, const PolarizationMap& map) {
  Monomial out(map.original_vars());
  for (std::size_t v = 0; v < m.nvars(); ++v)
    if (m[v]) out.raise(map.back(v).first, m[v]);
  return out;
}

struct StrippedIdeal {
  MonomialIdeal ideal;
  VertexSet removed;               ///< linear generators, in the original ring
  std::vector<std::size_t> kept;   ///< new variable index -> old variable index
};

/// Removes degree-1 generators and their variables; generators divisible by a
/// removed variable are dropped and the rest reindexed. Regularity is unchanged.
inline StrippedIdeal strip_linear_generators(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  StrippedIdeal out{MonomialIdeal{}, VertexSet(n), {}};
  for (const auto& g : ideal.generators())
    if (g.degree() == 1) out.removed |= g.support();
  for (std::size_t v = 0; v < n; ++v)
    if (!out.removed.contains(v)) out.kept.push_back(v);
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.support().intersects(out.removed)) continue;
    Monomial m(out.kept.size());
    for (std::size_t i = 0; i < out.kept.size(); ++i) m.raise(i, g[out.kept[i]]);
    gens.push_back(std::move(m));
  }
  out.ideal = minimalize(std::move(gens), out.kept.size());
  std::vector<std::string> names;
  for (auto v : out.kept) names.push_back(ideal.var_name(v));
  out.ideal.set_var_names(std::move(names));
  return out;
}

/// "x3*x5^2" style rendering of one generator.
inline std::string format_monomial(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(unsigned{m[i]});
  }
  return s.empty() ? "1" : s;
}

/// Same as format_monomial but with the ideal's display names.
inline std::string display_monomial(const Monomial& m, const MonomialIdeal& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.var_name(i);
    if (m[i] > 1) s += '^' + std::to_string(unsigned{m[i]});
  }
  return s.empty() ? "1" : s;
}

/// Ideal text: header "n <nvars>", then one generator per line.
inline std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << "n " << ideal.nvars() << '\n';
  for (const auto& g : ideal.generators()) os << format_monomial(g) << '\n';
  return os.str();
}

inline MonomialIdeal parse_ideal(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> raw;
  std::size_t max_var = 0;
  bool any_var = false;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto where = "line " + std::to_string(ln + 1) + ": ";
    if (line.starts_with("n ")) {
      if (declared || !raw.empty()) throw ParseError(where + "misplaced header");
      declared = detail::parse_index(detail::trim(line.substr(2)), ln + 1);
      continue;
    }
    std::vector<std::pair<std::size_t, unsigned>> factors;
    std::size_t start = 0;
    while (start <= line.size()) {
      auto star = line.find('*', start);
      auto tok = detail::trim(line.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
      if (tok.size() < 2 || tok[0] != 'x') throw ParseError(where + "malformed factor '" + std::string(tok) + "'");
      tok.remove_prefix(1);
      unsigned e = 1;
      if (auto caret = tok.find('^'); caret != std::string_view::npos) {
        e = static_cast<unsigned>(detail::parse_index(tok.substr(caret + 1), ln + 1));
        tok = tok.substr(0, caret);
        if (e == 0 || e > 255) throw ParseError(where + "exponent must be in 1..255");
      }
      const auto var = detail::parse_index(tok, ln + 1);
      if (var >= kMaxVertices) throw ParseError(where + "variable index exceeds 1023");
      factors.emplace_back(var, e);
      max_var = std::max(max_var, var);
      any_var = true;
      if (star == std::string_view::npos) break;
      start = star + 1;
    }
    raw.push_back(std::move(factors));
  }
  const std::size_t n = declared ? *declared : (any_var ? max_var + 1 : 0);
  if (declared && any_var && max_var >= n) throw ParseError("variable index exceeds header count");
  std::vector<Monomial> gens;
  for (const auto& f : raw) {
    Monomial m(n);
    for (auto [v, e] : f) m.raise(v, e);
    gens.push_back(std::move(m));
  }
  return minimalize(std::move(gens), n);
}

}  // namespace regkit
