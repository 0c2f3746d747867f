#pragma once

// Independent oracle: multigraded Betti numbers of R/I from the Koszul complex
// K(x) (x) R/I, strand by strand over the lcm lattice. Nothing here touches
// the simplicial code path.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "regkit/errors.hpp"
#include "regkit/monomial.hpp"
#include "regkit/regularity.hpp"

namespace regkit {

/// Graded Betti numbers of R/I over GF(p).
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;  ///< (i, j) -> beta_{i,j}(R/I), nonzero only
  unsigned characteristic = 2;

  [[nodiscard]] std::size_t quotient(int i, int j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  /// beta_{i,j}(I) = beta_{i+1,j}(R/I).
  [[nodiscard]] std::size_t ideal(int i, int j) const { return quotient(i + 1, j); }
  /// max(j - i) over nonzero entries = reg(R/I).
  [[nodiscard]] int quotient_regularity() const {
    int r = 0;
    for (const auto& [ij, b] : entries) r = std::max(r, ij.second - ij.first);
    return r;
  }
};

struct OracleResult {
  RegularityResult regularity;
  BettiTable betti;
};

inline constexpr std::size_t kOracleMaxVars = 12;
inline constexpr std::size_t kOracleMaxGens = 25;

namespace detail {

// Rank over GF(p) by dense row reduction; rows are consumed.
inline std::size_t dense_rank_mod_p(std::vector<std::vector<unsigned>> rows, unsigned p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  auto inv = [p](unsigned a) {
    unsigned r = 1, e = p - 2, b = a % p;
    while (e) {
      if (e & 1U) r = r * b % p;
      b = b * b % p;
      e >>= 1U;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const unsigned s = inv(rows[rank][c] % p);
    for (auto& x : rows[rank]) x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const unsigned f = rows[r][c] % p;
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Exponent>> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<std::vector<Exponent>> seen;
  std::vector<std::vector<Exponent>> elems;
  elems.emplace_back(ideal.nvars(), 0);  // lcm of the empty set
  seen.insert(elems.back());
  for (const auto& g : ideal.generators()) {
    const std::size_t cur = elems.size();
    for (std::size_t i = 0; i < cur; ++i) {
      std::vector<Exponent> u(ideal.nvars());
      for (std::size_t v = 0; v < u.size(); ++v) u[v] = std::max(elems[i][v], g[v]);
      if (seen.insert(u).second) elems.push_back(std::move(u));
    }
  }
  return elems;
}

}  // namespace detail

inline OracleResult koszul_oracle_reg(const MonomialIdeal& ideal, unsigned p = 2) {
  if (ideal.is_zero()) throw PreconditionError("koszul oracle: zero ideal");
  if (ideal.nvars() > kOracleMaxVars || ideal.num_generators() > kOracleMaxGens)
    throw PreconditionError("koszul oracle refuses instances above 12 variables or 25 generators");
  if (!is_prime(p) || p > 251) throw ParameterError("characteristic must be a prime <= 251");
  const std::size_t n = ideal.nvars();
  auto in_ideal = [&](const std::vector<Exponent>& m) {
    for (const auto& g : ideal.generators()) {
      bool divides = true;
      for (std::size_t v = 0; v < n && divides; ++v) divides = g[v] <= m[v];
      if (divides) return true;
    }
    return false;
  };

  OracleResult out;
  out.betti.characteristic = p;
  for (const auto& a : detail::lcm_lattice(ideal)) {
    std::vector<std::size_t> supp;
    int total = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (a[v]) {
        supp.push_back(v);
        total += a[v];
      }
    const std::size_t k = supp.size();
    // basis[i]: masks F over supp with |F| = i and x^{a - F} not in I
    std::vector<std::vector<std::uint32_t>> basis(k + 1);
    std::vector<int> index(std::size_t{1} << k, -1);
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      auto m = a;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1U) --m[supp[b]];
      if (in_ideal(m)) continue;
      auto& layer = basis[static_cast<std::size_t>(__builtin_popcount(mask))];
      index[mask] = static_cast<int>(layer.size());
      layer.push_back(mask);
    }
    // rank of d_i : K_i -> K_{i-1}
    std::vector<std::size_t> rank(k + 2, 0);
    for (std::size_t i = 1; i <= k; ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      std::vector<std::vector<unsigned>> rows(basis[i].size(), std::vector<unsigned>(basis[i - 1].size(), 0));
      for (std::size_t r = 0; r < basis[i].size(); ++r) {
        const auto mask = basis[i][r];
        int pos = 0;
        for (std::size_t b = 0; b < k; ++b) {
          if (!(mask >> b & 1U)) continue;
          const int target = index[mask & ~(1U << b)];
          if (target >= 0) rows[r][static_cast<std::size_t>(target)] = (pos % 2 == 0) ? 1U : p - 1;
          ++pos;
        }
      }
      rank[i] = detail::dense_rank_mod_p(std::move(rows), p);
    }
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t b = basis[i].size() - rank[i] - rank[i + 1];
      if (b) out.betti.entries[{static_cast<int>(i), total}] += b;
    }
  }
  out.regularity.value = out.betti.quotient_regularity() + 1;
  out.regularity.method = Method::koszul_oracle;
  out.regularity.characteristic = p;
  return out;
}

}  // namespace regkit
