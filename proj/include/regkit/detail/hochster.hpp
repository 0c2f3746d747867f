#pragma once

// Hochster search: max over W of l + 2 with H~_l(Delta[W]) != 0, where Delta
// is the Stanley-Reisner complex of a squarefree ideal given by generator
// supports. Candidates are visited in shortlex order; the first W reaching the
// maximum is the certificate.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "regkit/bits.hpp"
#include "regkit/field.hpp"
#include "regkit/options.hpp"

namespace regkit::detail {

/// Polarized vertex -> original variable, plus the unpolarized generators.
/// A union W of polarized generator supports folds to the exponent vector b
/// counting its copies per variable, and K^W has the homology of the upper
/// Koszul complex K^b = {tau subset of supp b : x^(b - tau) in I}.
struct Fold {
  std::vector<std::uint32_t> var;
  std::size_t nvars = 0;
  std::vector<std::vector<std::uint8_t>> gens;
};

inline constexpr std::size_t kFoldMaxSupport = 16;

/// Reduced Betti numbers of K^b. With g <= b, x^g divides x^(b - tau) iff tau
/// avoids tight(g) = {v : g_v = b_v}, so K^b is generated by supp b - tight(g).
class FoldedHomology {
 public:
  FoldedHomology(const Fold& fold, const PrimeField& field) : fold_(fold), field_(field) {}

  /// Empty when supp b exceeds kFoldMaxSupport.
  template <class Bits>
  bool load(const Bits& w) {
    b_.assign(fold_.nvars, 0);
    w.for_each([&](std::size_t v) { ++b_[fold_.var[v]]; });
    std::vector<int> pos(fold_.nvars, -1);
    std::size_t k = 0;
    for (std::size_t v = 0; v < fold_.nvars; ++v)
      if (b_[v]) pos[v] = static_cast<int>(k++);
    if (k > kFoldMaxSupport) return false;
    k_ = k;
    tight_.clear();
    for (const auto& g : fold_.gens) {
      std::uint32_t t = 0;
      bool fits = true;
      for (std::size_t v = 0; v < fold_.nvars && fits; ++v) {
        if (g[v] > b_[v]) fits = false;
        else if (g[v] && g[v] == b_[v]) t |= std::uint32_t{1} << pos[v];
      }
      if (fits) tight_.push_back(t);
    }
    std::sort(tight_.begin(), tight_.end());
    tight_.erase(std::unique(tight_.begin(), tight_.end()), tight_.end());
    faces_.assign(k_ + 2, {});
    for (std::uint32_t tau = 0; tau < (std::uint32_t{1} << k_); ++tau)
      for (auto t : tight_)
        if (!(tau & t)) {
          faces_[static_cast<std::size_t>(__builtin_popcount(tau))].push_back(tau);
          break;
        }
    rank_.assign(k_ + 2, -1);
    return true;
  }

  /// dim H~_j(K^b), j >= -1.
  std::size_t betti(int j) {
    if (j < -1) return 0;
    const auto s = static_cast<std::size_t>(j + 1);
    if (s > k_) return 0;
    const std::size_t c = faces_[s].size();
    return c ? c - rank(s) - rank(s + 1) : 0;
  }

 private:
  std::size_t rank(std::size_t s) {
    if (s == 0 || s > k_) return 0;
    if (rank_[s] >= 0) return static_cast<std::size_t>(rank_[s]);
    const auto& upper = faces_[s];
    const auto& lower = faces_[s - 1];
    std::size_t r = 0;
    if (!upper.empty() && !lower.empty()) {
      std::vector<SparseColumn> cols(upper.size());
      const bool binary = field_.p() == 2;
      for (std::size_t c = 0; c < upper.size(); ++c) {
        std::size_t i = 0;
        for (std::uint32_t rest = upper[c]; rest; rest &= rest - 1, ++i) {
          const std::uint32_t f = upper[c] & ~(rest & (~rest + 1));
          const auto it = std::lower_bound(lower.begin(), lower.end(), f);
          cols[c].rows.push_back(static_cast<std::uint32_t>(it - lower.begin()));
          if (!binary) cols[c].vals.push_back(field_.sign(i % 2 == 1));
        }
        // rows must ascend: dropping a higher bit gives a smaller mask
        std::reverse(cols[c].rows.begin(), cols[c].rows.end());
        std::reverse(cols[c].vals.begin(), cols[c].vals.end());
      }
      r = sparse_rank(cols, field_, lower.size());
    }
    rank_[s] = static_cast<long long>(r);
    return r;
  }

  const Fold& fold_;
  PrimeField field_;
  std::vector<std::uint8_t> b_;
  std::size_t k_ = 0;
  std::vector<std::uint32_t> tight_;
  std::vector<std::vector<std::uint32_t>> faces_;
  std::vector<long long> rank_;
};

/// Reduced homology of Delta[W] and of its Alexander dual inside W,
/// K^W = {F subset of W : W - F contains a generator}, with
/// H~_l(Delta[W]) = H~_{|W|-l-3}(K^W). Reused across many W by one thread.
template <std::size_t Wd>
class SubsetHomology {
 public:
  using Bits = FixedBits<Wd>;
  static constexpr int kDelta = 0;
  static constexpr int kDual = 1;

  SubsetHomology(const std::vector<Bits>& gens, const std::vector<std::vector<std::uint32_t>>& gens_by_min,
                 const PrimeField& field)
      : gens_(gens), by_min_(gens_by_min), field_(field) {}

  /// Routes evaluate() through K^b; only valid when every W is a union of
  /// generator supports.
  void set_fold(const Fold* fold) {
    if (fold) folded_.emplace(*fold, field_);
  }

  /// Caps the faces of one dimension; overflow() reports a hit.
  void set_face_limit(std::size_t limit) { face_limit_ = limit; }
  [[nodiscard]] bool overflow() const { return overflow_; }

  void load(const Bits& w) {
    w_ = w;
    verts_.clear();
    w.for_each([&](std::size_t v) { verts_.push_back(static_cast<std::uint32_t>(v)); });
    m_ = verts_.size();
    inside_.clear();
    for (auto v : verts_)
      for (auto gi : by_min_[v])
        if (gens_[gi].subset_of(w)) inside_.push_back(gens_[gi]);
    // Delta side: generator minus its largest vertex, keyed by that vertex's position
    below_max_.assign(m_, {});
    auto& pos_of = pos_of_;
    pos_of.resize(Bits::kCapacity);
    for (std::size_t i = 0; i < m_; ++i) pos_of[verts_[i]] = static_cast<int>(i);
    for (const auto& g : inside_) {
      int top = -1;
      g.for_each([&](std::size_t v) { top = static_cast<int>(v); });
      Bits rest = g;
      rest.reset(static_cast<std::size_t>(top));
      below_max_[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(top)])].push_back(rest);
    }
    // dual side: per position, mask of inside generators containing that vertex
    gwords_ = (inside_.size() + 63) / 64;
    contains_.assign(m_ * gwords_, 0);
    for (std::size_t gi = 0; gi < inside_.size(); ++gi)
      inside_[gi].for_each([&](std::size_t v) {
        contains_[static_cast<std::size_t>(pos_of[v]) * gwords_ + gi / 64] |= std::uint64_t{1} << (gi % 64);
      });
    for (int s = 0; s < 2; ++s) {
      faces_[s].assign(m_ + 3, {});
      have_[s].assign(m_ + 3, false);
      rank_[s].assign(m_ + 3, -1);
    }
    overflow_ = false;
  }

  [[nodiscard]] std::size_t size() const { return m_; }
  [[nodiscard]] bool contains_generator() const { return !inside_.empty(); }

  /// dim H~_j of Delta[W] (side kDelta) or K^W (side kDual), j >= -1.
  std::size_t betti(int side, int j) {
    const auto s = static_cast<std::size_t>(j + 1);
    if (s > m_) return 0;
    const std::size_t c = faces(side, s).size();
    if (c == 0) return 0;
    return c - rank(side, s) - rank(side, s + 1);
  }

  /// Largest value in [lo, hi] of l + 2 with H~_l(Delta[W]) != 0, else 0.
  int evaluate(const Bits& w, int lo, int hi) {
    if (folded_ && folded_->load(w)) {
      const int m = w.count();
      for (int v = std::min(hi, m); v >= lo; --v)
        if (folded_->betti(m - v - 1)) return v;
      return 0;
    }
    load(w);
    const int m = static_cast<int>(m_);
    hi = std::min(hi, m);
    for (int v = hi; v >= lo; --v) {
      const int l = v - 2, k = m - l - 3;
      const std::size_t b = l <= k ? betti(kDelta, l) : betti(kDual, k);
      if (b) return v;
    }
    return 0;
  }

  /// Faces with `s` vertices of the chosen side, lexicographic.
  const std::vector<Bits>& faces(int side, std::size_t s) {
    if (s >= faces_[side].size()) {
      faces_[side].resize(s + 1);
      have_[side].resize(s + 1, false);
      rank_[side].resize(s + 2, -1);
    }
    if (have_[side][s]) return faces_[side][s];
    auto& out = faces_[side][s];
    out.clear();
    Bits cur{};
    if (side == kDelta) {
      dfs_delta(0, s, cur, out);
    } else if (!inside_.empty()) {
      alive_.assign((s + 1) * gwords_, 0);
      for (std::size_t gi = 0; gi < inside_.size(); ++gi) alive_[gi / 64] |= std::uint64_t{1} << (gi % 64);
      dfs_dual(0, 0, s, cur, out);
    }
    have_[side][s] = true;
    return out;
  }

 private:
  // rank of d: C(size s) -> C(size s - 1)
  std::size_t rank(int side, std::size_t s) {
    if (s == 0 || s > m_) return 0;
    if (s >= rank_[side].size()) rank_[side].resize(s + 1, -1);
    if (rank_[side][s] >= 0) return static_cast<std::size_t>(rank_[side][s]);
    const auto& upper = faces(side, s);
    const auto& lower = faces(side, s - 1);
    std::size_t r = 0;
    if (upper.empty() || lower.empty()) {
      r = 0;
    } else if (s == 1) {
      r = 1;
    } else {
      std::vector<SparseColumn> cols(upper.size());
      const bool binary = field_.p() == 2;
      for (std::size_t c = 0; c < upper.size(); ++c) {
        std::size_t pos = 0;
        auto& col = cols[c];
        upper[c].for_each([&](std::size_t v) {
          Bits g = upper[c];
          g.reset(v);
          const auto it = std::lower_bound(lower.begin(), lower.end(), g,
                                           [](const Bits& a, const Bits& b) { return lex_less_same_size(a, b); });
          col.rows.push_back(static_cast<std::uint32_t>(it - lower.begin()));
          if (!binary) col.vals.push_back(field_.sign(pos % 2 == 1));
          ++pos;
        });
        // removing larger vertices gives lexicographically smaller faces
        std::reverse(col.rows.begin(), col.rows.end());
        std::reverse(col.vals.begin(), col.vals.end());
      }
      r = sparse_rank(cols, field_, lower.size());
    }
    rank_[side][s] = static_cast<long long>(r);
    return r;
  }

  void dfs_delta(std::size_t from, std::size_t want, Bits& cur, std::vector<Bits>& out) {
    if (want == 0) {
      push(out, cur);
      return;
    }
    for (std::size_t p = from; p + want <= m_ && !overflow_; ++p) {
      bool ok = true;
      for (const auto& rest : below_max_[p])
        if (rest.subset_of(cur)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.set(verts_[p]);
      dfs_delta(p + 1, want - 1, cur, out);
      cur.reset(verts_[p]);
    }
  }

  void dfs_dual(std::size_t from, std::size_t depth, std::size_t want, Bits& cur, std::vector<Bits>& out) {
    if (depth == want) {
      push(out, cur);
      return;
    }
    const std::uint64_t* alive = &alive_[depth * gwords_];
    std::uint64_t* next = &alive_[(depth + 1) * gwords_];
    for (std::size_t p = from; p + (want - depth) <= m_ && !overflow_; ++p) {
      const std::uint64_t* hit = &contains_[p * gwords_];
      std::uint64_t any = 0;
      for (std::size_t i = 0; i < gwords_; ++i) any |= (next[i] = alive[i] & ~hit[i]);
      if (!any) continue;
      cur.set(verts_[p]);
      dfs_dual(p + 1, depth + 1, want, cur, out);
      cur.reset(verts_[p]);
    }
  }

  void push(std::vector<Bits>& out, const Bits& f) {
    if (face_limit_ && out.size() >= face_limit_) {
      overflow_ = true;
      return;
    }
    out.push_back(f);
  }

  const std::vector<Bits>& gens_;
  const std::vector<std::vector<std::uint32_t>>& by_min_;
  PrimeField field_;
  Bits w_{};
  std::vector<std::uint32_t> verts_;
  std::vector<int> pos_of_;
  std::size_t m_ = 0;
  std::vector<Bits> inside_;
  std::vector<std::vector<Bits>> below_max_;
  std::size_t gwords_ = 0;
  std::vector<std::uint64_t> contains_;
  std::vector<std::uint64_t> alive_;
  std::vector<std::vector<Bits>> faces_[2];
  std::vector<bool> have_[2];
  std::vector<long long> rank_[2];
  std::size_t face_limit_ = 0;
  bool overflow_ = false;
  std::optional<FoldedHomology> folded_;
};

struct SearchResult {
  int value = 0;
  VertexSet witness;
  int l = -1;
  int upper_bound = 0;
  std::uint64_t evaluated = 0;
  bool lattice = false;  ///< candidates came from the lcm lattice
};

template <std::size_t Wd>
class HochsterSearch {
 public:
  using Bits = FixedBits<Wd>;

  HochsterSearch(std::size_t n, const std::vector<VertexSet>& gens, const EngineOptions& opt,
                 const Fold* fold = nullptr)
      : n_(n), opt_(opt), field_(opt.p), by_min_(n), by_vertex_(n), fold_(opt.cone_pruning ? fold : nullptr) {
    for (const auto& g : gens) {
      if (g.size() < 2) throw PreconditionError("Hochster search needs generators of degree >= 2");
      gens_.push_back(g.template to_fixed<Wd>());
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      by_min_[static_cast<std::size_t>(gens_[i].lowest())].push_back(static_cast<std::uint32_t>(i));
      gens_[i].for_each([&](std::size_t v) { by_vertex_[v].push_back(static_cast<std::uint32_t>(i)); });
      support_ |= gens_[i];
      lower_ = std::max(lower_, gens_[i].count());
    }
  }

  SearchResult run() {
    start_ = std::chrono::steady_clock::now();
    result_ = SearchResult{};
    if (gens_.empty()) throw PreconditionError("Hochster search on the zero ideal");
    upper_ = topological_upper_bound();
    result_.upper_bound = upper_;
    std::vector<Bits> lattice;
    if (opt_.cone_pruning && build_lattice(lattice)) {
      result_.lattice = true;
      run_lattice(lattice);
    } else {
      run_layers();
    }
    return result_;
  }

  /// min(|support|, dim Delta + 2), lowered by one when the top homology of
  /// Delta vanishes (top cycles of Delta[W] are top cycles of Delta).
  int topological_upper_bound() {
    const int trivial = support_.count();
    SubsetHomology<Wd> h(gens_, by_min_, field_);
    h.set_face_limit(kTopFaceLimit);
    h.load(support_);
    std::size_t s = 1;
    while (s <= h.size() && !h.faces(SubsetHomology<Wd>::kDelta, s).empty()) {
      if (h.overflow()) return trivial;
      ++s;
    }
    if (h.overflow()) return trivial;
    const int dim = static_cast<int>(s) - 2;
    int bound = dim + 2;
    if (h.betti(SubsetHomology<Wd>::kDelta, dim) == 0 && !h.overflow()) bound = dim + 1;
    return std::min(trivial, bound);
  }

 private:
  static constexpr std::size_t kLatticeCap = std::size_t{1} << 21;
  static constexpr std::uint64_t kLatticeWork = std::uint64_t{1} << 27;  ///< pairwise unions tried
  static constexpr std::size_t kTopFaceLimit = 400000;
  static constexpr std::size_t kBatch = 4096;

  bool build_lattice(std::vector<Bits>& elems) {
    std::unordered_set<Bits, FixedBitsHash<Wd>> seen;
    std::uint64_t work = 0;
    for (const auto& g : gens_) {
      const std::size_t cur = elems.size();
      work += cur;
      if (work > kLatticeWork) return false;
      if (seen.insert(g).second) elems.push_back(g);
      for (std::size_t i = 0; i < cur; ++i) {
        const Bits u = elems[i] | g;
        if (seen.insert(u).second) elems.push_back(u);
      }
      if (elems.size() > kLatticeCap) return false;
    }
    std::sort(elems.begin(), elems.end(), [](const Bits& a, const Bits& b) {
      const int ca = a.count(), cb = b.count();
      return ca != cb ? ca < cb : lex_less_same_size(a, b);
    });
    return true;
  }

  void run_lattice(const std::vector<Bits>& elems) {
    std::vector<Bits> batch;
    for (const auto& w : elems) {
      const int k = w.count();
      if (k < lower_ || k <= result_.value) continue;
      batch.push_back(w);
      if (batch.size() == kBatch || !same_size_follows(elems, w)) {
        if (flush(batch)) return;
      }
    }
    flush(batch);
  }

  // batches never straddle two layers
  static bool same_size_follows(const std::vector<Bits>& elems, const Bits& w) {
    const auto idx = static_cast<std::size_t>(&w - elems.data());
    return idx + 1 < elems.size() && elems[idx + 1].count() == w.count();
  }

  void run_layers() {
    std::vector<std::uint32_t> universe;
    const Bits all = opt_.cone_pruning ? support_ : full_universe();
    all.for_each([&](std::size_t v) { universe.push_back(static_cast<std::uint32_t>(v)); });
    const std::size_t u = universe.size();
    std::vector<Bits> batch;
    for (std::size_t k = static_cast<std::size_t>(std::max(lower_, 1)); k <= u; ++k) {
      if (static_cast<int>(k) <= result_.value) continue;
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        Bits w{};
        for (auto i : idx) w.set(universe[i]);
        if (!opt_.cone_pruning || non_cone(w)) {
          batch.push_back(w);
          if (batch.size() == kBatch && flush(batch)) return;
        }
        std::size_t p = k;
        while (p > 0 && idx[p - 1] == u - k + p - 1) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
      }
      if (flush(batch)) return;
    }
  }

  Bits full_universe() const {
    Bits b{};
    for (std::size_t v = 0; v < n_; ++v) b.set(v);
    return b;
  }

  // every vertex of w lies in a generator inside w
  bool non_cone(const Bits& w) const {
    bool ok = true;
    w.for_each([&](std::size_t v) {
      if (!ok) return;
      bool covered = false;
      for (auto gi : by_vertex_[v])
        if (gens_[gi].subset_of(w)) {
          covered = true;
          break;
        }
      ok = covered;
    });
    return ok;
  }

  /// Evaluates one batch in order-independent fashion; returns true when the
  /// search is finished (upper bound reached).
  bool flush(std::vector<Bits>& batch) {
    if (batch.empty()) return false;
    bool capped = false;
    if (opt_.budget.subset_cap && result_.evaluated + batch.size() > opt_.budget.subset_cap) {
      const auto keep = opt_.budget.subset_cap - std::min<std::uint64_t>(opt_.budget.subset_cap, result_.evaluated);
      pending_ = batch[static_cast<std::size_t>(keep)];
      batch.resize(static_cast<std::size_t>(keep));
      capped = true;
    }
    const std::size_t count = batch.size();
    std::vector<int> vals(count, 0);
    const int floor = std::max(lower_, result_.value + 1);
    std::atomic<int> shared{floor};
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_top{std::numeric_limits<std::size_t>::max()};
    std::atomic<bool> timed_out{false};

    auto worker = [&]() {
      SubsetHomology<Wd> h(gens_, by_min_, field_);
      h.set_fold(fold_);
      std::size_t since_check = 0;
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        if (i > first_top.load()) continue;
        if (opt_.budget.seconds > 0 && ++since_check >= 64) {
          since_check = 0;
          if (elapsed() > opt_.budget.seconds) timed_out = true;
        }
        if (timed_out) break;
        const int thr = std::max(floor, shared.load());
        const int v = h.evaluate(batch[i], thr, upper_);
        vals[i] = v;
        int cur = shared.load();
        while (v > cur && !shared.compare_exchange_weak(cur, v)) {
        }
        if (v == upper_) {
          std::size_t ft = first_top.load();
          while (i < ft && !first_top.compare_exchange_weak(ft, i)) {
          }
        }
      }
    };
    const unsigned t = std::max(1U, opt_.threads);
    if (t == 1 || count < 64) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();
    }
    result_.evaluated += count;

    int best_v = 0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < count; ++i)
      if (vals[i] > best_v) {
        best_v = vals[i];
        best_i = i;
      }
    if (best_v > result_.value) {
      result_.value = best_v;
      result_.l = best_v - 2;
      result_.witness = VertexSet::from_fixed(batch[best_i], n_);
    }
    if (timed_out) throw_budget("time limit", batch.empty() ? Bits{} : batch.front());
    if (capped) throw_budget("subset cap", pending_);
    batch.clear();
    return result_.value >= upper_;
  }

  [[noreturn]] void throw_budget(const char* why, const Bits& from) {
    std::string where = std::string(why) + "; candidates from |W| = " + std::to_string(from.count()) + ", W = {";
    bool first = true;
    from.for_each([&](std::size_t v) {
      where += (first ? "" : ",") + std::to_string(v);
      first = false;
    });
    where += "} onward";
    throw BudgetExceeded(result_.value, result_.witness.universe() ? result_.witness : VertexSet(n_), result_.l, where,
                         result_.evaluated);
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  std::size_t n_;
  EngineOptions opt_;
  PrimeField field_;
  std::vector<Bits> gens_;
  std::vector<std::vector<std::uint32_t>> by_min_;
  std::vector<std::vector<std::uint32_t>> by_vertex_;
  const Fold* fold_;
  Bits support_{};
  int lower_ = 0;
  int upper_ = 0;
  Bits pending_{};
  SearchResult result_;
  std::chrono::steady_clock::time_point start_;
};

/// Entry point over dynamic vertex sets; picks the word width from n.
inline SearchResult hochster_search(std::size_t n, const std::vector<VertexSet>& gens, const EngineOptions& opt,
                                    const Fold* fold = nullptr) {
  return dispatch_width(n, [&](auto width) {
    constexpr std::size_t W = decltype(width)::value;
    HochsterSearch<W> search(n, gens, opt, fold);
    return search.run();
  });
}

}  // namespace regkit::detail
