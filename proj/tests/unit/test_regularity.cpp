#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "regkit/bounds.hpp"
#include "regkit/regularity.hpp"
#include "support.hpp"

using namespace regkit;

namespace {

Graph cycle(int n) {
  support::EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return support::to_graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  support::EdgeList e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return support::to_graph(a + b, e);
}

std::vector<oracle::Exps> exps_of(const MonomialIdeal& ideal) {
  std::vector<oracle::Exps> out;
  for (const auto& g : ideal.generators()) {
    oracle::Exps e(ideal.nvars());
    for (std::size_t v = 0; v < ideal.nvars(); ++v) e[v] = g[v];
    out.push_back(e);
  }
  return out;
}

MonomialIdeal random_ideal(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 3;
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < 1 + rng() % 5; ++i) {
    std::vector<Exponent> e(n, 0);
    for (auto& x : e) x = static_cast<Exponent>(rng() % 4);
    if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) e[0] = 2;
    gens.emplace_back(e);
  }
  return minimalize(std::move(gens), n);
}

std::size_t polarized_size(const MonomialIdeal& ideal) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < ideal.nvars(); ++v) {
    Exponent e = 0;
    for (const auto& g : ideal.generators()) e = std::max(e, g[v]);
    total += e;
  }
  return total;
}

}  // namespace

TEST(Regularity, FiveCycle) {
  const auto r = reg_edge_power(cycle(5), 1);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.method, Method::hochster);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->w.size(), 5U);
  EXPECT_EQ(r.certificate->l, 1);
  EXPECT_TRUE(certificate_holds(edge_ideal(cycle(5)), *r.certificate));
}

TEST(Regularity, SmallClassics) {
  EXPECT_EQ(reg_edge_power(support::to_graph(3, {{0, 1}, {1, 2}}), 1).value, 2);
  EXPECT_EQ(reg_edge_power(complete_bipartite(2, 2), 2).value, 4);
  EXPECT_EQ(reg_monomial(parse_ideal("x0^2*x1\n")).value, 3);
  const auto two_edges = support::to_graph(4, {{0, 1}, {2, 3}});
  const auto r = reg_edge_power(two_edges, 1);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.method, Method::component_sum);
  EXPECT_TRUE(certificate_holds(edge_ideal(two_edges), *r.certificate));
}

TEST(Regularity, Errors) {
  EXPECT_THROW(reg_monomial(MonomialIdeal(3)), PreconditionError);
  EXPECT_THROW(reg_monomial(parse_ideal("x0\nx1\n")), PreconditionError);
  EXPECT_THROW(reg_edge_power(Graph(3), 1), PreconditionError);
  EXPECT_THROW(reg_edge_power(cycle(4), 0), ParameterError);
  EXPECT_THROW(reg_squarefree_hochster(parse_ideal("x0^2*x1\n")), PreconditionError);
  EXPECT_THROW(reg_sequence(cycle(4), 0), ParameterError);
}

TEST(Regularity, LinearGeneratorsAreStripped) {
  EXPECT_EQ(reg_monomial(parse_ideal("x0\nx1*x2\nx2*x3\n")).value, 2);
}

TEST(Regularity, MatchesOracleOnRandomIdeals) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 120) {
    const auto ideal = random_ideal(rng);
    if (polarized_size(ideal) > 11 || strip_linear_generators(ideal).ideal.is_zero()) continue;
    ++checked;
    for (unsigned p : {2U, 3U}) {
      EngineOptions opt;
      opt.p = p;
      const auto want = oracle::regularity(exps_of(ideal), static_cast<int>(p));
      const auto got = reg_monomial(ideal, opt);
      ASSERT_EQ(got.value, want) << format_ideal(ideal);
      ASSERT_TRUE(got.certificate);
      EXPECT_TRUE(certificate_holds(hochster_ring(ideal), *got.certificate, p));
    }
  }
}

TEST(Regularity, MatchesOracleOnGraphPowers) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 120; ++t) {
    const auto g = support::random_graph(rng, 7);
    const int n = static_cast<int>(g.order());
    EXPECT_EQ(reg_edge_power(g, 1).value, oracle::edge_regularity(n, support::to_edges(g))) << encode_graph6(g);
  }
  for (int t = 0; t < 25; ++t) {
    const auto g = support::random_graph(rng, 5);
    if (g.num_edges() > 6) continue;
    const int n = static_cast<int>(g.order());
    EXPECT_EQ(reg_edge_power(g, 2).value, oracle::edge_regularity(n, support::to_edges(g), 2)) << encode_graph6(g);
  }
}

TEST(Regularity, SwitchesDoNotChangeValues) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 60; ++t) {
    const unsigned s = 1 + static_cast<unsigned>(rng() % 2);
    const auto g = support::random_graph(rng, s == 1 ? 8 : 6);
    const int base = reg_edge_power(g, s).value;
    EngineOptions plain;
    plain.fast_paths = false;
    plain.cone_pruning = false;
    plain.split_components = false;
    EXPECT_EQ(reg_edge_power(g, s, plain).value, base);
    EngineOptions no_cone;
    no_cone.cone_pruning = false;
    EXPECT_EQ(reg_edge_power(g, s, no_cone).value, base);
    EngineOptions p3;
    p3.p = 3;
    EXPECT_EQ(reg_edge_power(g, s, p3).value, base);
  }
}

TEST(Regularity, FoldAgreesWithPlainSearch) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 80; ++t) {
    const auto ideal = random_ideal(rng);
    if (strip_linear_generators(ideal).ideal.is_zero()) continue;
    EngineOptions opt;
    opt.split_components = false;
    const auto folded = reg_monomial(ideal, opt);
    const auto plain = reg_squarefree_hochster(hochster_ring(ideal), opt);
    EXPECT_EQ(folded.value, plain.value) << format_ideal(ideal);
  }
}

TEST(Regularity, ThreadsAreDeterministic) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 20; ++t) {
    const auto g = support::random_graph(rng, 9);
    EngineOptions one, many;
    many.threads = 4;
    const auto a = reg_edge_power(g, 2, one), b = reg_edge_power(g, 2, many);
    EXPECT_EQ(a.value, b.value);
    ASSERT_EQ(a.certificate.has_value(), b.certificate.has_value());
    if (a.certificate) {
      EXPECT_EQ(a.certificate->w, b.certificate->w);
      EXPECT_EQ(a.certificate->l, b.certificate->l);
    }
  }
}

TEST(Regularity, BudgetGivesCertifiedLowerBound) {
  EngineOptions opt;
  opt.fast_paths = false;
  opt.budget.subset_cap = 3;
  const auto g = cycle(9);
  try {
    reg_edge_power(g, 2, opt);
    FAIL() << "expected the budget to run out";
  } catch (const BudgetExceeded& e) {
    EXPECT_LE(e.lower_bound(), reg_edge_power(g, 2).value);
    if (e.lower_bound() > 0 && e.homology_degree() >= 0) {
      Certificate c{e.witness(), e.homology_degree(), {}};
      EXPECT_TRUE(certificate_holds(hochster_ring(power(edge_ideal(g), 2)), c));
    }
  }
}

TEST(Regularity, SesBoundIsAnUpperBound) {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 40; ++t) {
    const auto g = support::random_graph(rng, 8);
    const auto ideal = edge_ideal(g);
    EXPECT_GE(ses_upper_bound(ideal, 2, 64, SesOptions{64, 4, 0}), reg_monomial(ideal).value);
  }
  EXPECT_THROW(ses_upper_bound(MonomialIdeal(2)), PreconditionError);
}

TEST(Regularity, HochsterUpperBound) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    const auto ideal = edge_ideal(support::random_graph(rng, 9));
    EXPECT_GE(hochster_upper_bound(ideal), reg_monomial(ideal).value);
  }
}

TEST(Regularity, CompleteBipartitePowers) {
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (unsigned s = 1; s <= 3; ++s) {
        EngineOptions opt;
        opt.fast_paths = false;
        EXPECT_EQ(reg_edge_power(complete_bipartite(a, b), s, opt).value, static_cast<int>(2 * s)) << a << b << s;
      }
}

TEST(Regularity, CochordalFastPath) {
  const auto r = reg_edge_power(complete_bipartite(3, 3), 3);
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.method, Method::hhz_power);
  EXPECT_FALSE(r.certificate);
  EXPECT_EQ(reg_edge_power(complete_bipartite(2, 3), 1).method, Method::froeberg);
}

TEST(Regularity, SequenceAndStabilization) {
  const auto seq = reg_sequence(cycle(5), 3);
  ASSERT_EQ(seq.entries.size(), 3U);
  EXPECT_EQ(seq.entries[0].result->value, 3);
  EXPECT_EQ(seq.entries[1].result->value, 4);
  EXPECT_EQ(seq.entries[2].result->value, 6);
  EXPECT_EQ(seq.observed_stabilization, std::optional<unsigned>{2});
}

TEST(Regularity, BoundChecksPassOnSmallGraphs) {
  std::vector<Graph> corpus;
  for (std::uint64_t mask = 1; mask < (1U << 10); mask += 7) corpus.push_back(support::to_graph(5, support::edges_of_mask(5, mask)));
  std::size_t seen = 0;
  const auto rep = verify_bounds(corpus, 3, {}, [&](const GraphBoundReport&) { ++seen; });
  EXPECT_FALSE(rep.halted);
  EXPECT_EQ(seen, corpus.size());
  EXPECT_EQ(rep.count(CheckStatus::fail), 0U);
  EXPECT_EQ(rep.count(CheckStatus::error), 0U);
  for (const auto& g : rep.graphs) EXPECT_FALSE(g.checks.empty());
}

TEST(Regularity, BoundCheckReportsEmptyGraphAsError) {
  const auto rep = verify_bounds({Graph(3)}, 2);
  ASSERT_EQ(rep.graphs.size(), 1U);
  EXPECT_EQ(rep.graphs[0].status, CheckStatus::error);
}
