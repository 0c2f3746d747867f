#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace regkit {

/// Largest vertex/variable count any engine path accepts.
inline constexpr std::size_t kMaxVertices = 1024;

/// Fixed-width bitset used on the hot paths of the engine.
template <std::size_t Words>
struct FixedBits {
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kCapacity = Words * 64;

  std::array<std::uint64_t, Words> w{};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }

  [[nodiscard]] bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  [[nodiscard]] bool any() const { return !none(); }

  [[nodiscard]] int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }

  [[nodiscard]] bool subset_of(const FixedBits& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }

  [[nodiscard]] bool intersects(const FixedBits& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }

  /// Lowest set index, or -1.
  [[nodiscard]] int lowest() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(static_cast<std::size_t>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  FixedBits& operator|=(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) w[i] |= o.w[i];
    return *this;
  }
  FixedBits& operator&=(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) w[i] &= o.w[i];
    return *this;
  }
  FixedBits& operator-=(const FixedBits& o) {
    for (std::size_t i = 0; i < Words; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  friend FixedBits operator|(FixedBits a, const FixedBits& b) { return a |= b; }
  friend FixedBits operator&(FixedBits a, const FixedBits& b) { return a &= b; }
  friend FixedBits operator-(FixedBits a, const FixedBits& b) { return a -= b; }
  friend bool operator==(const FixedBits&, const FixedBits&) = default;

  /// Total order on raw words; used for lookup tables only.
  friend bool raw_less(const FixedBits& a, const FixedBits& b) {
    for (std::size_t i = Words; i-- > 0;)
      if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
    return false;
  }

  /// Lexicographic order of the ascending index lists, for sets of equal size.
  friend bool lex_less_same_size(const FixedBits& a, const FixedBits& b) {
    for (std::size_t i = 0; i < Words; ++i) {
      const std::uint64_t d = a.w[i] ^ b.w[i];
      if (d) return (a.w[i] >> std::countr_zero(d)) & 1U;
    }
    return false;
  }
};

template <std::size_t Words>
struct FixedBitsHash {
  std::size_t operator()(const FixedBits<Words>& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : b.w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// A subset of the vertex universe {0, ..., n-1}. Only bits below n are ever
/// set; binary operations require equal universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> elems) : VertexSet(universe) {
    for (auto v : elems) insert(v);
  }
  VertexSet(std::size_t universe, const std::vector<std::size_t>& elems) : VertexSet(universe) {
    for (auto v : elems) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  [[nodiscard]] std::size_t universe() const { return n_; }

  void insert(std::size_t v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(std::size_t v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  [[nodiscard]] bool contains(std::size_t v) const {
    return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }

  [[nodiscard]] std::size_t size() const {
    std::size_t c = 0;
    for (auto x : words_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  [[nodiscard]] bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
  }

  [[nodiscard]] std::optional<std::size_t> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t x = words_[i];
      while (x) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  [[nodiscard]] std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  [[nodiscard]] bool is_subset_of(const VertexSet& o) const {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const VertexSet& o) const {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  [[nodiscard]] VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Shortlex order: by size, then lexicographically by ascending elements.
  friend bool shortlex_less(const VertexSet& a, const VertexSet& b) {
    const auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < std::min(a.words_.size(), b.words_.size()); ++i) {
      const std::uint64_t d = a.words_[i] ^ b.words_[i];
      if (d) return (a.words_[i] >> std::countr_zero(d)) & 1U;
    }
    return a.n_ < b.n_;
  }
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return shortlex_less(a, b); }

  /// Same elements in a different universe (elements must fit).
  [[nodiscard]] VertexSet resized(std::size_t universe) const {
    VertexSet s(universe);
    for_each([&](std::size_t v) { s.insert(v); });
    return s;
  }

  [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

  template <std::size_t W>
  [[nodiscard]] FixedBits<W> to_fixed() const {
    assert(n_ <= W * 64);
    FixedBits<W> b;
    for (std::size_t i = 0; i < words_.size() && i < W; ++i) b.w[i] = words_[i];
    return b;
  }

  template <std::size_t W>
  static VertexSet from_fixed(const FixedBits<W>& b, std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size() && i < W; ++i) s.words_[i] = b.w[i];
    s.trim();
    return s;
  }

 private:
  void check(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex index outside the universe");
  }
  void same(const VertexSet& o) const {
    (void)o;
    assert(n_ == o.n_ && "VertexSet universes differ");
  }
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Calls `f(std::integral_constant<std::size_t, W>{})` with the smallest word
/// count W in {1, 2, 4, 16} that holds `n` bits.
template <class F>
decltype(auto) dispatch_width(std::size_t n, F&& f) {
  if (n <= 64) return f(std::integral_constant<std::size_t, 1>{});
  if (n <= 128) return f(std::integral_constant<std::size_t, 2>{});
  if (n <= 256) return f(std::integral_constant<std::size_t, 4>{});
  if (n <= kMaxVertices) return f(std::integral_constant<std::size_t, 16>{});
  throw std::length_error("more than 1024 vertices or variables are not supported");
}

}  // namespace regkit
