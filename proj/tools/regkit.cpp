// regkit: command-line front end. Exit codes: 0 ok, 1 error, 2 bound FAIL,
// 3 budget-partial.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regkit/bounds.hpp"
#include "regkit/constructions.hpp"
#include "regkit/graph_io.hpp"
#include "regkit/koszul.hpp"
#include "regkit/report.hpp"

namespace {

using namespace regkit;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;
constexpr int kExitPartial = 3;

struct Config {
  std::string input = "-";
  std::string format = "edge-list";
  std::string output = "json";
  unsigned s = 2;
  unsigned s_max = 2;
  unsigned p = 2;
  unsigned threads = 1;
  double budget_seconds = 0;
  std::uint64_t budget_subsets = 0;
  std::uint64_t seed = 0;
  bool certificate = false;
  bool no_fast_paths = false;
  bool no_millis = false;
  std::vector<std::size_t> edge;
  unsigned rounds = 4;
  std::size_t samples = 20;
  double colon_seconds = 10;
};

EngineOptions engine(const Config& c) {
  EngineOptions o;
  o.p = c.p;
  o.threads = c.threads;
  o.fast_paths = !c.no_fast_paths;
  o.budget = Budget{c.budget_seconds, c.budget_subsets};
  return o;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// A corpus item: a graph, or a monomial ideal under --format ideal.
struct Item {
  std::string name;
  std::optional<Graph> graph;
  std::optional<MonomialIdeal> ideal;
};

std::vector<Item> load_items(const Config& c) {
  const std::string text = read_input(c.input);
  std::vector<Item> items;
  if (c.format == "ideal") {
    auto ideal = parse_ideal(text);
    items.push_back({c.input == "-" ? "stdin" : c.input, std::nullopt, std::move(ideal)});
  } else if (c.format == "graph6") {
    for (auto& g : parse_graph6_corpus(text)) items.push_back({encode_graph6(g), std::move(g), std::nullopt});
  } else {
    auto g = parse_edge_list(text);
    items.push_back({encode_graph6(g), std::move(g), std::nullopt});
  }
  return items;
}

class Emitter {
 public:
  explicit Emitter(const Config& c) : c_(c) {}

  void record(const RunRecord& r) {
    if (c_.output == "csv") {
      if (!header_) std::cout << csv_header() << '\n';
      header_ = true;
      std::cout << to_csv(r) << '\n';
    } else if (c_.output == "text") {
      std::cout << to_text(r) << '\n';
    } else {
      json(to_json(r, !c_.no_millis));
    }
    std::cout.flush();
  }

  /// Structured output; csv and text fall back to compact JSON.
  void json(const ojson& j) {
    std::cout << j.dump() << '\n';
    std::cout.flush();
  }

 private:
  const Config& c_;
  bool header_ = false;
};

class Timer {
 public:
  [[nodiscard]] std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

int worse(int a, int b) {
  auto rank = [](int e) { return e == kExitFail ? 3 : e == kExitError ? 2 : e == kExitPartial ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

MonomialIdeal item_ideal(const Item& it, unsigned s) {
  const auto base = it.ideal ? *it.ideal : edge_ideal(*it.graph);
  return s == 1 ? base : power(base, s);
}

RunRecord regularity_record(const Config& c, const Item& it, unsigned s, int& exit) {
  const Timer t;
  RunRecord rec;
  try {
    const auto res = it.graph ? reg_edge_power(*it.graph, s, engine(c)) : reg_monomial(item_ideal(it, s), engine(c));
    rec = make_record(it.name, s, res, c.certificate);
  } catch (const BudgetExceeded& e) {
    rec = make_partial_record(it.name, s, c.p, e);
    exit = worse(exit, kExitPartial);
  }
  rec.millis = t.millis();
  return rec;
}

int cmd_reg(const Config& c, unsigned s) {
  Emitter out(c);
  int exit = kExitOk;
  for (const auto& it : load_items(c)) out.record(regularity_record(c, it, s, exit));
  return exit;
}

int cmd_reg_seq(const Config& c) {
  Emitter out(c);
  int exit = kExitOk;
  for (const auto& it : load_items(c))
    for (unsigned s = 1; s <= c.s_max; ++s) out.record(regularity_record(c, it, s, exit));
  return exit;
}

int cmd_colon(const Config& c) {
  if (c.edge.size() != 2) throw ParameterError("--edge needs two vertex indices");
  Emitter out(c);
  int exit = kExitOk;
  for (const auto& it : load_items(c)) {
    if (!it.graph) throw ParameterError("colon needs a graph input");
    const Timer t;
    const auto ideal = colon_square_formula(*it.graph, c.edge[0], c.edge[1]);
    RunRecord rec;
    try {
      rec = make_record(it.name, 2, reg_monomial(ideal, engine(c)), c.certificate);
    } catch (const BudgetExceeded& e) {
      rec = make_partial_record(it.name, 2, c.p, e);
      exit = worse(exit, kExitPartial);
    }
    rec.millis = t.millis();
    if (c.output != "json") {
      out.record(rec);
      continue;
    }
    auto j = to_json(rec, !c.no_millis);
    j["edge"] = {c.edge[0], c.edge[1]};
    ojson gens = ojson::array();
    for (const auto& g : ideal.generators()) gens.push_back(display_monomial(g, ideal));
    j["generators"] = gens;
    out.json(j);
  }
  return exit;
}

int cmd_props(const Config& c) {
  Emitter out(c);
  for (const auto& it : load_items(c)) {
    if (!it.graph) throw ParameterError("props needs a graph input");
    const auto& g = *it.graph;
    ojson j;
    j["graph"] = it.name;
    j["n"] = g.order();
    j["m"] = g.num_edges();
    j["bipartite"] = is_bipartite(g).has_value();
    j["chordal"] = is_chordal(g).has_value();
    j["cochordal"] = is_cochordal(g);
    j["gap_free"] = is_gap_free(g);
    out.json(j);
  }
  return kExitOk;
}

int cmd_verify(const Config& c) {
  std::vector<Graph> corpus;
  for (auto& it : load_items(c)) {
    if (!it.graph) throw ParameterError("verify needs graphs");
    corpus.push_back(std::move(*it.graph));
  }
  Emitter out(c);
  int exit = kExitOk;
  Timer t;
  verify_bounds(corpus, c.s_max, engine(c), [&](const GraphBoundReport& gr) {
    ojson j;
    j["graph"] = gr.graph6;
    j["index"] = gr.index;
    j["reg"] = gr.reg1;
    j["status"] = status_name(gr.status);
    ojson checks = ojson::array();
    for (const auto& ch : gr.checks) {
      ojson cj;
      cj["name"] = ch.name;
      cj["s"] = ch.s;
      cj["edge"] = ch.edge ? ojson{ch.edge->first, ch.edge->second} : ojson(nullptr);
      cj["lhs"] = ch.lhs;
      cj["rhs"] = ch.rhs;
      cj["status"] = status_name(ch.status);
      if (!ch.detail.empty()) cj["detail"] = ch.detail;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    if (!gr.message.empty()) j["message"] = gr.message;
    if (gr.status == CheckStatus::fail) j["reproduce"] = format_edge_list(corpus[gr.index]);
    if (!c.no_millis) j["millis"] = t.millis();
    t = Timer{};
    out.json(j);
    if (gr.status == CheckStatus::fail) exit = worse(exit, kExitFail);
    if (gr.status == CheckStatus::skipped) exit = worse(exit, kExitPartial);
    if (gr.status == CheckStatus::error) exit = worse(exit, kExitError);
  });
  return exit;
}

int cmd_dunce(const Config& c) {
  Emitter out(c);
  const Timer t;
  const auto base = c.input == "-" ? dunce_hat_complex() : parse_labeled_complex(read_input(c.input));
  const auto sub = flag_no_square_subdivide(base, c.rounds);
  ojson j;
  j["input_checksum"] = base.checksum;
  j["rounds"] = sub.rounds;
  j["subdivided_checksum"] = sub.complex.checksum;
  j["flag"] = validate_flag_no_square(sub.complex).flag;
  j["no_square"] = validate_flag_no_square(sub.complex).no_square;
  if (!sub.success) {
    j["status"] = "subdivision failed";
    out.json(j);
    return kExitPartial;
  }
  ProbeOptions po;
  po.engine = engine(c);
  po.edge_samples = c.samples;
  po.seed = c.seed;
  po.colon_seconds = c.colon_seconds;
  const auto rep = dunce_hat_probe(sub.complex, po);
  j["vertices"] = rep.vertices;
  j["facets"] = rep.facets;
  j["reg"] = {{"lower", rep.reg_lower}, {"upper", rep.reg_upper}, {"status", rep.reg_status}};
  if (rep.reg_exact) j["reg"]["value"] = rep.reg_exact->value;
  if (rep.reg_lower_certificate) {
    j["reg"]["certificate_W"] = rep.reg_lower_certificate->w.elements();
    j["reg"]["certificate_l"] = rep.reg_lower_certificate->l;
  }
  if (!rep.reg_note.empty()) j["reg"]["note"] = rep.reg_note;
  ojson colons = ojson::array();
  for (const auto& cp : rep.colons) {
    ojson cj;
    cj["edge"] = {cp.edge.first, cp.edge.second};
    cj["lower"] = cp.lower_bound;
    cj["computed_upper"] = cp.computed_upper ? ojson(*cp.computed_upper) : ojson(nullptr);
    cj["theorem_upper"] = cp.theorem_upper;
    cj["status"] = cp.status;
    colons.push_back(cj);
  }
  j["colons"] = colons;
  j["square"] = {{"lower", rep.square_lower}, {"upper", rep.square_upper}, {"status", rep.square_status}};
  if (rep.square_exact) j["square"]["value"] = *rep.square_exact;
  if (!rep.square_note.empty()) j["square"]["note"] = rep.square_note;
  if (!c.no_millis) j["millis"] = t.millis();
  out.json(j);
  return rep.reg_status == "exact" && rep.square_status == "exact" ? kExitOk : kExitPartial;
}

int cmd_oracle(const Config& c) {
  Emitter out(c);
  int exit = kExitOk;
  for (const auto& it : load_items(c)) {
    const auto ideal = item_ideal(it, c.s);
    const auto oracle = koszul_oracle_reg(ideal, c.p);
    const auto engine_value = reg_monomial(ideal, engine(c)).value;
    ojson j;
    j["graph"] = it.name;
    j["s"] = c.s;
    j["hochster"] = engine_value;
    j["oracle"] = oracle.regularity.value;
    j["agree"] = engine_value == oracle.regularity.value;
    ojson betti = ojson::array();
    for (const auto& [ij, b] : oracle.betti.entries) betti.push_back({ij.first, ij.second, b});
    j["betti_quotient"] = betti;
    j["char"] = c.p;
    out.json(j);
    if (engine_value != oracle.regularity.value) exit = worse(exit, kExitFail);
  }
  return exit;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("input", c.input, "input file, '-' for stdin")->capture_default_str();
  sub->add_option("--format", c.format, "edge-list | graph6 | ideal")
      ->check(CLI::IsMember({"edge-list", "graph6", "ideal"}))
      ->capture_default_str();
  sub->add_option("--output", c.output, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--char", c.p, "prime characteristic <= 251")->capture_default_str();
  sub->add_option("--threads", c.threads, "engine worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--budget-seconds", c.budget_seconds, "wall-clock limit per computation, 0 = none")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--budget-subsets", c.budget_subsets, "candidate-set limit per computation, 0 = none");
  sub->add_option("--seed", c.seed, "seed for sampling")->capture_default_str();
  sub->add_flag("--certificate", c.certificate, "include the witness W and l");
  sub->add_flag("--no-fast-paths", c.no_fast_paths, "always run the Hochster pipeline");
  sub->add_flag("--no-millis", c.no_millis, "omit timings from JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Castelnuovo-Mumford regularity of edge ideals and their powers"};
  app.require_subcommand(1);
  Config c;

  auto* reg = app.add_subcommand("reg", "reg I(G)");
  auto* reg_power = app.add_subcommand("reg-power", "reg I(G)^s");
  reg_power->add_option("--s", c.s, "power")->check(CLI::PositiveNumber)->capture_default_str();
  auto* reg_seq = app.add_subcommand("reg-seq", "reg I(G)^s for s = 1..smax");
  reg_seq->add_option("--smax", c.s_max, "largest power")->check(CLI::PositiveNumber)->capture_default_str();
  auto* reg_ideal = app.add_subcommand("reg-ideal", "reg of a monomial ideal file");
  auto* colon_cmd = app.add_subcommand("colon", "the ideal I(G)^2 : ab and its regularity");
  colon_cmd->add_option("--edge", c.edge, "edge a b")->expected(2)->required();
  auto* props = app.add_subcommand("props", "bipartite, chordal, cochordal and gap-free flags");
  auto* verify = app.add_subcommand("verify", "check the regularity bounds over a graph6 corpus");
  verify->add_option("--corpus", c.input, "graph6 corpus file");
  verify->add_option("--smax", c.s_max, "largest power for bipartite graphs")->capture_default_str();
  auto* dunce = app.add_subcommand("dunce", "dunce-hat experiment (input: labeled complex, default built-in)");
  dunce->add_option("--rounds", c.rounds, "subdivision rounds at most")->capture_default_str();
  dunce->add_option("--samples", c.samples, "sampled edges for the colon check")->capture_default_str();
  dunce->add_option("--colon-seconds", c.colon_seconds, "engine budget per sampled colon")->capture_default_str();
  auto* oracle = app.add_subcommand("oracle", "Koszul cross-check of the engine");
  oracle->add_option("--s", c.s, "power")->check(CLI::PositiveNumber)->capture_default_str();
  for (auto* sub : {reg, reg_power, reg_seq, reg_ideal, colon_cmd, props, verify, dunce, oracle}) add_common(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (!is_prime(c.p) || c.p > 251) throw ParameterError("--char must be a prime <= 251");
    if (reg->parsed()) return cmd_reg(c, 1);
    if (reg_power->parsed()) return cmd_reg(c, c.s);
    if (reg_seq->parsed()) return cmd_reg_seq(c);
    if (reg_ideal->parsed()) {
      c.format = "ideal";
      return cmd_reg(c, 1);
    }
    if (colon_cmd->parsed()) return cmd_colon(c);
    if (props->parsed()) return cmd_props(c);
    if (verify->parsed()) {
      if (!verify->count("--format")) c.format = "graph6";
      return cmd_verify(c);
    }
    if (dunce->parsed()) return cmd_dunce(c);
    if (oracle->parsed()) {
      if (!oracle->count("--s")) c.s = 1;
      return cmd_oracle(c);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
