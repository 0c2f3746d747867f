#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "regkit/complex.hpp"
#include "regkit/field.hpp"

namespace regkit {

/// Dense matrix over GF(p): bit-packed rows for p = 2, one byte per entry otherwise.
class MatrixGF {
 public:
  MatrixGF(std::size_t rows, std::size_t cols, unsigned p)
      : rows_(rows), cols_(cols), field_(p), stride_(p == 2 ? (cols + 63) / 64 : cols) {
    if (p == 2)
      bits_.assign(rows * stride_, 0);
    else
      bytes_.assign(rows * stride_, 0);
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] unsigned characteristic() const { return field_.p(); }

  [[nodiscard]] unsigned get(std::size_t r, std::size_t c) const {
    if (binary()) return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1U;
    return bytes_[r * stride_ + c];
  }
  void set(std::size_t r, std::size_t c, unsigned v) {
    v %= field_.p();
    if (binary()) {
      auto& w = bits_[r * stride_ + c / 64];
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      w = v ? (w | bit) : (w & ~bit);
    } else {
      bytes_[r * stride_ + c] = static_cast<std::uint8_t>(v);
    }
  }

  /// Row echelon elimination on a copy; pivots taken in column order.
  [[nodiscard]] std::size_t rank() const {
    MatrixGF m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && m.get(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      m.swap_rows(piv, r);
      for (std::size_t i = r + 1; i < rows_; ++i)
        if (m.get(i, c)) m.eliminate(i, r, c);
      ++r;
    }
    return r;
  }

 private:
  [[nodiscard]] bool binary() const { return field_.p() == 2; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < stride_; ++k) {
      if (binary())
        std::swap(bits_[a * stride_ + k], bits_[b * stride_ + k]);
      else
        std::swap(bytes_[a * stride_ + k], bytes_[b * stride_ + k]);
    }
  }

  // row i -= (m[i][c] / m[r][c]) * row r
  void eliminate(std::size_t i, std::size_t r, std::size_t c) {
    if (binary()) {
      for (std::size_t k = 0; k < stride_; ++k) bits_[i * stride_ + k] ^= bits_[r * stride_ + k];
      return;
    }
    const auto factor = field_.mul(get(i, c), field_.inv(get(r, c)));
    for (std::size_t k = c; k < cols_; ++k)
      bytes_[i * stride_ + k] = field_.sub(bytes_[i * stride_ + k], field_.mul(factor, bytes_[r * stride_ + k]));
  }

  std::size_t rows_, cols_;
  PrimeField field_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> bytes_;
};

/// Reduced Betti numbers b_{-1}, b_0, ... over GF(p).
struct HomologyVector {
  std::vector<std::size_t> betti;  ///< betti[l + 1] = dim H~_l
  unsigned characteristic = 2;

  [[nodiscard]] std::size_t at(int l) const {
    const auto i = static_cast<std::size_t>(l + 1);
    return l >= -1 && i < betti.size() ? betti[i] : 0;
  }
  [[nodiscard]] bool is_zero() const {
    return std::all_of(betti.begin(), betti.end(), [](std::size_t b) { return b == 0; });
  }
  friend bool operator==(const HomologyVector&, const HomologyVector&) = default;
};

namespace detail {

inline std::size_t face_index(const std::vector<VertexSet>& sorted, const VertexSet& f) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), f) - sorted.begin());
}

/// Sparse boundary columns of d_l : C_l -> C_{l-1}; both face lists lex-sorted.
inline std::vector<SparseColumn> boundary_columns(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper,
                                                  const PrimeField& f) {
  std::vector<SparseColumn> cols(upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto vs = upper[c].elements();
    std::vector<std::pair<std::uint32_t, std::uint8_t>> entries;
    for (std::size_t pos = 0; pos < vs.size(); ++pos) {
      auto g = upper[c];
      g.erase(vs[pos]);
      entries.emplace_back(static_cast<std::uint32_t>(face_index(lower, g)), f.sign(pos % 2 == 1));
    }
    std::sort(entries.begin(), entries.end());
    for (auto [r, v] : entries) {
      cols[c].rows.push_back(r);
      if (f.p() != 2) cols[c].vals.push_back(v);
    }
  }
  return cols;
}

}  // namespace detail

/// Matrix of d_l : C_l -> C_{l-1} of the augmented chain complex, faces in
/// lexicographic order; row 0 of d_0 is the empty face.
inline MatrixGF boundary_matrix(const SimplicialComplex& k, int l, unsigned p = 2) {
  if (k.is_void()) throw PreconditionError("boundary_matrix: void complex");
  if (l < 0) throw PreconditionError("boundary_matrix: l must be nonnegative");
  const PrimeField f(p);
  const auto lower = k.faces(l - 1);
  const auto upper = k.faces(l);
  MatrixGF m(lower.size(), upper.size(), p);
  const auto cols = detail::boundary_columns(lower, upper, f);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t i = 0; i < cols[c].rows.size(); ++i) m.set(cols[c].rows[i], c, p == 2 ? 1U : cols[c].vals[i]);
  return m;
}

inline HomologyVector reduced_betti_vector(const SimplicialComplex& k, unsigned p = 2) {
  const PrimeField f(p);
  HomologyVector h;
  h.characteristic = p;
  if (k.is_void()) return h;
  const auto faces = k.all_faces();  // faces[i] has i vertices, dimension i - 1
  const std::size_t top = faces.size();
  // ranks[i] = rank of d_{i-1}: C_{i-1} -> C_{i-2}; d_{-1} = 0
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t i = 1; i < top; ++i) {
    auto cols = detail::boundary_columns(faces[i - 1], faces[i], f);
    ranks[i] = sparse_rank(cols, f, faces[i - 1].size());
  }
  h.betti.resize(top);
  for (std::size_t i = 0; i < top; ++i) h.betti[i] = faces[i].size() - ranks[i] - ranks[i + 1];
  return h;
}

}  // namespace regkit
