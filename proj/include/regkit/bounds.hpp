#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regkit/edge_ideal.hpp"
#include "regkit/graph.hpp"
#include "regkit/graph_io.hpp"
#include "regkit/regularity.hpp"

namespace regkit {

enum class CheckStatus { pass, fail, skipped, error };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIPPED";
    case CheckStatus::error: return "ERROR";
  }
  return "UNKNOWN";
}

/// One inequality lhs <= rhs.
struct BoundCheck {
  std::string name;  ///< square-bound, bipartite-power-bound, colon-bound, suspension-bound, colon-induction
  unsigned s = 0;
  std::optional<Edge> edge;
  int lhs = 0;
  int rhs = 0;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct GraphBoundReport {
  std::size_t index = 0;
  std::string graph6;
  int reg1 = 0;
  std::vector<BoundCheck> checks;
  CheckStatus status = CheckStatus::pass;
  std::string message;
};

struct BoundsReport {
  std::vector<GraphBoundReport> graphs;
  bool halted = false;  ///< a FAIL stopped the run
  [[nodiscard]] std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(graphs.begin(), graphs.end(), [&](const GraphBoundReport& g) { return g.status == s; }));
  }
};

/// Per graph: (a) reg I^2 <= reg I + 2; (b) for bipartite G and 2 <= s <= s_max,
/// reg I^s <= 2s + reg I - 2; (c) reg(I^2 : ab) <= reg I and (d) reg I(G') <=
/// reg I for every edge ab; (e) reg I^2 <= max(reg I, reg(I^2 : ab) + 2).
/// The first FAIL stops the run.
inline BoundsReport verify_bounds(const std::vector<Graph>& corpus, unsigned s_max, const EngineOptions& opt = {},
                                  const std::function<void(const GraphBoundReport&)>& on_graph = {}) {
  BoundsReport report;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    GraphBoundReport gr;
    gr.index = gi;
    gr.graph6 = encode_graph6(g);
    auto add = [&](BoundCheck c) {
      if (c.status == CheckStatus::pass && c.lhs > c.rhs) {
        c.status = CheckStatus::fail;
        if (gr.status != CheckStatus::error) gr.status = CheckStatus::fail;
      }
      if (c.status == CheckStatus::skipped && gr.status == CheckStatus::pass) gr.status = CheckStatus::skipped;
      gr.checks.push_back(std::move(c));
    };
    try {
      if (!g.has_edges()) throw PreconditionError("graph has no edges");
      const int r1 = reg_edge_power(g, 1, opt).value;
      gr.reg1 = r1;
      std::vector<std::optional<int>> regs(std::max(2U, s_max) + 1);
      regs[1] = r1;
      auto reg_s = [&](unsigned s) -> std::optional<int> {
        if (!regs[s]) {
          try {
            regs[s] = reg_edge_power(g, s, opt).value;
          } catch (const BudgetExceeded&) {
            return std::nullopt;
          }
        }
        return regs[s];
      };
      const auto r2 = reg_s(2);
      {
        BoundCheck c{"square-bound", 2, std::nullopt, r2.value_or(0), r1 + 2, CheckStatus::pass, ""};
        if (!r2) c.status = CheckStatus::skipped;
        add(c);
      }
      if (is_bipartite(g)) {
        for (unsigned s = 2; s <= s_max; ++s) {
          const auto rs = reg_s(s);
          BoundCheck c{"bipartite-power-bound", s, std::nullopt, rs.value_or(0), static_cast<int>(2 * s) + r1 - 2,
                       CheckStatus::pass, ""};
          if (!rs) c.status = CheckStatus::skipped;
          add(c);
        }
      }
      int colon_max = 0;
      bool colon_complete = true;
      for (auto e : g.edges()) {
        const auto [a, b] = e;
        BoundCheck colon_check{"colon-bound", 2, e, 0, r1, CheckStatus::pass, ""};
        try {
          colon_check.lhs = reg_monomial(colon_square_formula(g, a, b), opt).value;
          colon_max = std::max(colon_max, colon_check.lhs);
        } catch (const BudgetExceeded& ex) {
          colon_check.status = CheckStatus::skipped;
          colon_check.detail = ex.what();
          colon_complete = false;
        }
        add(colon_check);
        BoundCheck susp{"suspension-bound", 1, e, 0, r1, CheckStatus::pass, ""};
        try {
          susp.lhs = reg_edge_power(suspension_graph(g, a, b), 1, opt).value;
        } catch (const BudgetExceeded& ex) {
          susp.status = CheckStatus::skipped;
          susp.detail = ex.what();
        }
        add(susp);
      }
      BoundCheck induction{"colon-induction", 1, std::nullopt, r2.value_or(0), std::max(r1, colon_max + 2), CheckStatus::pass, ""};
      if (!r2 || !colon_complete) induction.status = CheckStatus::skipped;
      add(induction);
    } catch (const BudgetExceeded& ex) {
      gr.status = CheckStatus::skipped;
      gr.message = ex.what();
    } catch (const Error& ex) {
      gr.status = CheckStatus::error;
      gr.message = ex.what();
    }
    const bool failed = gr.status == CheckStatus::fail;
    if (on_graph) on_graph(gr);
    report.graphs.push_back(std::move(gr));
    if (failed) {
      report.halted = true;
      break;
    }
  }
  return report;
}

}  // namespace regkit
