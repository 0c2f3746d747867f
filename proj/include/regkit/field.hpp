#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "regkit/errors.hpp"

namespace regkit {

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// GF(p) for prime p <= 251 with a precomputed inverse table.
class PrimeField {
 public:
  explicit PrimeField(unsigned p = 2) : p_(p) {
    if (!is_prime(p) || p > 251) throw ParameterError("characteristic must be a prime <= 251, got " + std::to_string(p));
    for (unsigned a = 1; a < p; ++a)
      for (unsigned b = 1; b < p; ++b)
        if (a * b % p == 1) inv_[a] = static_cast<std::uint8_t>(b);
  }
  [[nodiscard]] unsigned p() const { return p_; }
  [[nodiscard]] std::uint8_t add(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + b) % p_); }
  [[nodiscard]] std::uint8_t sub(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
  [[nodiscard]] std::uint8_t mul(unsigned a, unsigned b) const { return static_cast<std::uint8_t>(a * b % p_); }
  [[nodiscard]] std::uint8_t neg(unsigned a) const { return static_cast<std::uint8_t>((p_ - a) % p_); }
  [[nodiscard]] std::uint8_t inv(unsigned a) const { return inv_[a]; }
  /// Image of +1 or -1.
  [[nodiscard]] std::uint8_t sign(bool negative) const { return negative ? static_cast<std::uint8_t>(p_ - 1) : std::uint8_t{1}; }

 private:
  unsigned p_;
  std::array<std::uint8_t, 256> inv_{};
};

/// Sparse column with strictly increasing row indices and nonzero values.
/// For p = 2 the value array stays empty.
struct SparseColumn {
  std::vector<std::uint32_t> rows;
  std::vector<std::uint8_t> vals;
};

/// Rank by column reduction keyed on the lowest (largest-index) entry.
/// Destroys `cols`.
inline std::size_t sparse_rank(std::vector<SparseColumn>& cols, const PrimeField& f, std::size_t nrows) {
  constexpr std::uint32_t kNone = 0xffffffffU;
  std::vector<std::uint32_t> owner(nrows, kNone);
  std::size_t rank = 0;
  std::vector<std::uint32_t> rbuf;
  std::vector<std::uint8_t> vbuf;
  const bool binary = f.p() == 2;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    while (!col.rows.empty()) {
      const auto low = col.rows.back();
      const auto o = owner[low];
      if (o == kNone) break;
      const auto& piv = cols[o];
      rbuf.clear();
      vbuf.clear();
      std::size_t i = 0, j = 0;
      if (binary) {
        while (i < col.rows.size() || j < piv.rows.size()) {
          if (j == piv.rows.size() || (i < col.rows.size() && col.rows[i] < piv.rows[j])) {
            rbuf.push_back(col.rows[i++]);
          } else if (i == col.rows.size() || piv.rows[j] < col.rows[i]) {
            rbuf.push_back(piv.rows[j++]);
          } else {
            ++i;
            ++j;
          }
        }
      } else {
        // col -= factor * piv with factor cancelling the low entries
        const auto factor = f.mul(col.vals.back(), f.inv(piv.vals.back()));
        while (i < col.rows.size() || j < piv.rows.size()) {
          if (j == piv.rows.size() || (i < col.rows.size() && col.rows[i] < piv.rows[j])) {
            rbuf.push_back(col.rows[i]);
            vbuf.push_back(col.vals[i++]);
          } else if (i == col.rows.size() || piv.rows[j] < col.rows[i]) {
            rbuf.push_back(piv.rows[j]);
            vbuf.push_back(f.neg(f.mul(factor, piv.vals[j++])));
          } else {
            const auto v = f.sub(col.vals[i++], f.mul(factor, piv.vals[j++]));
            if (v) {
              rbuf.push_back(col.rows[i - 1]);
              vbuf.push_back(v);
            }
          }
        }
        std::swap(col.vals, vbuf);
      }
      std::swap(col.rows, rbuf);
    }
    if (!col.rows.empty()) {
      owner[col.rows.back()] = c;
      ++rank;
    }
  }
  return rank;
}

}  // namespace regkit
