#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "regkit/bits.hpp"
#include "regkit/errors.hpp"

namespace regkit {

/// Zero means unlimited for both fields.
struct Budget {
  double seconds = 0.0;
  std::uint64_t subset_cap = 0;
};

struct EngineOptions {
  unsigned threads = 1;
  bool fast_paths = true;        ///< cochordal shortcuts in reg_edge_power
  bool cone_pruning = true;      ///< visit only non-cone W (unions of generators)
  bool split_components = true;  ///< disjoint-support additivity in reg_monomial
  Budget budget;
  unsigned p = 2;
};

/// The search stopped early. `lower_bound` is witnessed by (`witness`, `l`)
/// when positive; everything from `unexplored` on was not visited.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int lower_bound, VertexSet witness, int l, std::string unexplored, std::uint64_t evaluated)
      : Error("budget exceeded: regularity >= " + std::to_string(lower_bound) + "; unexplored " + unexplored),
        lower_bound_(lower_bound),
        witness_(std::move(witness)),
        l_(l),
        unexplored_(std::move(unexplored)),
        evaluated_(evaluated) {}

  [[nodiscard]] int lower_bound() const { return lower_bound_; }
  [[nodiscard]] const VertexSet& witness() const { return witness_; }
  [[nodiscard]] int homology_degree() const { return l_; }
  [[nodiscard]] const std::string& unexplored() const { return unexplored_; }
  [[nodiscard]] std::uint64_t evaluated() const { return evaluated_; }

 private:
  int lower_bound_;
  VertexSet witness_;
  int l_;
  std::string unexplored_;
  std::uint64_t evaluated_;
};

}  // namespace regkit
