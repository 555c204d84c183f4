#include "edgepoly/report.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

namespace edgepoly {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string kind_name(GraphClass k) {
  switch (k) {
    case GraphClass::NotFHM:
      return "not-FHM";
    case GraphClass::FHMNoPair:
      return "FHM-no-pair";
    case GraphClass::FundamentalFHM:
      return "fundamental-FHM";
  }
  return "?";
}

std::array<int, 2> edge_pair(const Graph& g, int edge) {
  const Edge& e = g.edge(edge);
  return {e.u, e.v};
}

GraphSummary graph_summary(const Graph& g) {
  GraphSummary s;
  s.d = g.vertex_count();
  s.n = g.edge_count();
  for (int k = 0; k < g.edge_count(); ++k) s.edges.push_back(edge_pair(g, k));
  return s;
}

// Classification, pair census, and the shared analysis state.
struct Analysis {
  Classification cls;
  std::vector<std::vector<Connector>> conns;  // per pair
  Clock::time_point started = Clock::now();
};

Analysis analyze_base(const Graph& g, const AnalyzeOptions& opts,
                      AnalysisReport& rep) {
  Analysis a;
  a.cls = classify(g, opts.enumeration);

  rep.graph = graph_summary(g);
  rep.classification.kind = kind_name(a.cls.kind);
  if (a.cls.bridgeless_pair) {
    rep.classification.bridgeless_pair = {
        a.cls.cycles[a.cls.bridgeless_pair->first].vertices,
        a.cls.cycles[a.cls.bridgeless_pair->second].vertices};
  }
  rep.budgets.cycles = static_cast<long long>(a.cls.cycles.size());

  a.conns.resize(a.cls.pairs.size());
  for (int p = 0; p < static_cast<int>(a.cls.pairs.size()); ++p) {
    a.conns[p] = connectors(g, a.cls.cycles, a.cls.pairs, p);
    PairSummary ps;
    ps.first = a.cls.cycles[a.cls.pairs[p].first].vertices;
    ps.second = a.cls.cycles[a.cls.pairs[p].second].vertices;
    for (const Connector& c : a.conns[p]) {
      if (c.kind == ConnectorKind::Bridge)
        ++ps.bridges;
      else
        ++ps.chords;
    }
    rep.pairs.push_back(std::move(ps));
  }
  rep.w_decision.status = "not-run";
  return a;
}

void finish(Analysis& a, AnalysisReport& rep) {
  rep.budgets.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               Clock::now() - a.started)
                               .count();
}

// Trivial verdicts from Thm 1.1; empty when the graph is fundamental.
std::optional<std::string> trivial_verdict(GraphClass k) {
  if (k == GraphClass::NotFHM) return "not-FHM";
  if (k == GraphClass::FHMNoPair) return "exists-trivially";
  return std::nullopt;
}

WitnessSummary witness_summary(const Graph& g,
                               const std::vector<InequalityVector>& rows,
                               const Witness& witness) {
  WitnessSummary s;
  std::vector<BigInt> coeffs = witness.normalized();
  // Printed witnesses re-verify against every inequality of their cone,
  // independent of the LP that found them.
  for (const InequalityVector& f : rows) {
    BigInt margin = 0;
    for (size_t k = 0; k < coeffs.size(); ++k)
      if (f.coeffs[k] != 0) margin += f.coeffs[k] * coeffs[k];
    if (margin <= 0)
      throw Error("normalized witness fails re-verification");
    s.margins.push_back(margin.str());
  }
  for (int k = 0; k < g.edge_count(); ++k) {
    s.edges.push_back(edge_pair(g, k));
    s.coeffs.push_back(coeffs[k].str());
  }
  return s;
}

std::string connector_kind_name(ConnectorKind k) {
  switch (k) {
    case ConnectorKind::Bridge:
      return "bridge";
    case ConnectorKind::ChordFirst:
      return "chord-first";
    case ConnectorKind::ChordSecond:
      return "chord-second";
  }
  return "?";
}

std::vector<ConnectorSummary> connector_summaries(
    const Graph& g, const std::vector<Connector>& sel) {
  std::vector<ConnectorSummary> out;
  for (const Connector& c : sel)
    out.push_back({connector_kind_name(c.kind), edge_pair(g, c.edge)});
  return out;
}

struct CriteriaRun {
  std::optional<BridgeSelection> passing;  // first criterion that held
  bool any_inconclusive = false;
};

CriteriaRun run_criteria(const Graph& g, const Analysis& a,
                         const SelectionContext& ctx,
                         const AnalyzeOptions& opts, AnalysisReport& rep) {
  CriteriaRun out;
  const Criterion all[] = {Criterion::Cor22, Criterion::Thm21,
                           Criterion::Cor24, Criterion::Thm23};
  for (Criterion crit : all) {
    if (opts.only_criterion && *opts.only_criterion != crit) continue;
    SearchOutcome res = search_selection(ctx, crit, opts.search_budget);
    rep.budgets.criteria_nodes += res.nodes;

    CriterionEntry entry;
    entry.name = criterion_name(crit);
    entry.nodes = res.nodes;
    switch (res.status) {
      case SearchOutcome::Status::Found: {
        entry.status = "holds";
        const BridgeSelection& sel = *res.selection;
        CriteriaReport cr = evaluate_selection(ctx, sel);
        std::vector<std::array<int, 2>> sel_edges;
        for (int e : cr.choice) sel_edges.push_back(edge_pair(g, e));
        entry.selection = std::move(sel_edges);
        entry.counts = cr.other_bridge_counts;
        entry.a_values = cr.a_values;
        entry.zero_walk_independence = cr.zero_walk_independence;
        break;
      }
      case SearchOutcome::Status::ExhaustedNone:
        entry.status = "fails-exhaustively";
        break;
      case SearchOutcome::Status::BudgetExceeded:
        entry.status = "inconclusive";
        out.any_inconclusive = true;
        break;
    }
    bool passed = res.status == SearchOutcome::Status::Found;
    if (passed && !out.passing) out.passing = res.selection;
    rep.criteria.push_back(std::move(entry));
    if (passed && !opts.run_all_criteria) break;
  }
  return out;
}

// Attach the W-witness derived from a passing criteria selection.
void attach_selection_witness(const Graph& g, const SelectionContext& ctx,
                              const BridgeSelection& sel, AnalysisReport& rep) {
  OpenCone cone = cone_of_bridge_selection(ctx, sel);
  std::optional<Witness> witness;
  if (check_cor_2_4(ctx, sel)) {
    // Standard weight vector: margins are exactly the a_i.
    witness = Witness::verified(cone.rows,
                                standard_weight_vector(ctx, sel).weights);
  } else {
    witness = strict_feasible(cone);
    rep.budgets.lp_calls += 1;
  }
  if (witness) {
    rep.w_decision.status = "nonempty";
    rep.w_decision.selection = connector_summaries(g, cone.provenance);
    rep.witness = witness_summary(g, cone.rows, *witness);
    rep.verdict = "exists";
  }
}

}  // namespace

AnalysisReport cmd_classify(const Graph& g, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  Analysis a = analyze_base(g, opts, rep);
  rep.verdict = trivial_verdict(a.cls.kind).value_or("unknown");
  finish(a, rep);
  return rep;
}

AnalysisReport cmd_criteria(const Graph& g, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  Analysis a = analyze_base(g, opts, rep);
  if (auto v = trivial_verdict(a.cls.kind)) {
    rep.verdict = *v;
    finish(a, rep);
    return rep;
  }
  SelectionContext ctx = SelectionContext::build(g, a.cls.cycles, a.cls.pairs);
  CriteriaRun run = run_criteria(g, a, ctx, opts, rep);
  if (run.passing) {
    attach_selection_witness(g, ctx, *run.passing, rep);
  } else {
    rep.verdict = "unknown";
  }
  finish(a, rep);
  return rep;
}

AnalysisReport cmd_decide(const Graph& g, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  Analysis a = analyze_base(g, opts, rep);
  if (auto v = trivial_verdict(a.cls.kind)) {
    rep.verdict = *v;
    finish(a, rep);
    return rep;
  }

  SelectionContext ctx = SelectionContext::build(g, a.cls.cycles, a.cls.pairs);
  CriteriaRun run = run_criteria(g, a, ctx, opts, rep);
  if (run.passing) {
    attach_selection_witness(g, ctx, *run.passing, rep);
    finish(a, rep);
    return rep;
  }

  DecideOptions dopts;
  dopts.budget = opts.search_budget;
  dopts.all_orientations = opts.all_orientations;
  dopts.criteria_guidance = false;  // criteria already ran above
  WDecision wd = decide_W(g, a.cls, dopts);
  rep.budgets.w_nodes = wd.nodes;
  rep.budgets.lp_calls += wd.lp_calls;
  switch (wd.status) {
    case WDecision::Status::Nonempty: {
      rep.w_decision.status = "nonempty";
      rep.w_decision.selection = connector_summaries(g, wd.selection);
      OpenCone cone = cone_of_connectors(g, a.cls.cycles, a.cls.pairs,
                                         wd.selection, opts.all_orientations);
      rep.witness = witness_summary(g, cone.rows, *wd.witness);
      rep.verdict = "exists";
      break;
    }
    case WDecision::Status::Empty:
      rep.w_decision.status = "empty";
      rep.verdict = "does-not-exist";
      break;
    case WDecision::Status::BudgetExceeded:
      rep.w_decision.status = "inconclusive";
      rep.verdict = "unknown";
      break;
  }
  finish(a, rep);
  return rep;
}

namespace {

json opt_to_json(const std::optional<std::vector<std::array<int, 2>>>& v) {
  if (!v) return nullptr;
  return json(*v);
}

}  // namespace

std::string to_json_string(const AnalysisReport& rep, int indent) {
  json j;
  j["graph"] = {{"d", rep.graph.d}, {"n", rep.graph.n},
                {"edges", rep.graph.edges}};
  j["classification"] = {{"kind", rep.classification.kind}};
  if (rep.classification.bridgeless_pair) {
    j["classification"]["bridgeless_pair"] = {
        (*rep.classification.bridgeless_pair)[0],
        (*rep.classification.bridgeless_pair)[1]};
  } else {
    j["classification"]["bridgeless_pair"] = nullptr;
  }

  json pairs = json::array();
  for (const PairSummary& p : rep.pairs)
    pairs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"bridges", p.bridges},
                     {"chords", p.chords}});
  j["pairs"] = {{"count", rep.pairs.size()}, {"items", pairs}};

  json crits = json::array();
  for (const CriterionEntry& c : rep.criteria) {
    json e = {{"name", c.name}, {"status", c.status}, {"nodes", c.nodes}};
    e["selection"] = opt_to_json(c.selection);
    e["counts"] = c.counts ? json(*c.counts) : json(nullptr);
    e["a_values"] = c.a_values ? json(*c.a_values) : json(nullptr);
    e["zero_walk_independence"] = c.zero_walk_independence
                                      ? json(*c.zero_walk_independence)
                                      : json(nullptr);
    crits.push_back(std::move(e));
  }
  j["criteria"] = std::move(crits);

  j["w_decision"] = {{"status", rep.w_decision.status}};
  if (rep.w_decision.selection) {
    json sel = json::array();
    for (const ConnectorSummary& c : *rep.w_decision.selection)
      sel.push_back({{"kind", c.kind}, {"edge", c.edge}});
    j["w_decision"]["selection"] = std::move(sel);
  } else {
    j["w_decision"]["selection"] = nullptr;
  }

  if (rep.witness) {
    j["witness"] = {{"edges", rep.witness->edges},
                    {"coeffs", rep.witness->coeffs},
                    {"margins", rep.witness->margins}};
  } else {
    j["witness"] = nullptr;
  }

  j["verdict"] = rep.verdict;
  j["budgets"] = {{"cycles", rep.budgets.cycles},
                  {"criteria_nodes", rep.budgets.criteria_nodes},
                  {"w_nodes", rep.budgets.w_nodes},
                  {"lp_calls", rep.budgets.lp_calls},
                  {"elapsed_ms", rep.budgets.elapsed_ms}};
  return j.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  AnalysisReport rep;
  rep.graph.d = j.at("graph").at("d").get<int>();
  rep.graph.n = j.at("graph").at("n").get<int>();
  rep.graph.edges =
      j.at("graph").at("edges").get<std::vector<std::array<int, 2>>>();

  rep.classification.kind = j.at("classification").at("kind").get<std::string>();
  const json& bp = j.at("classification").at("bridgeless_pair");
  if (!bp.is_null())
    rep.classification.bridgeless_pair = {bp.at(0).get<std::vector<int>>(),
                                          bp.at(1).get<std::vector<int>>()};

  for (const json& p : j.at("pairs").at("items")) {
    PairSummary ps;
    ps.first = p.at("first").get<std::vector<int>>();
    ps.second = p.at("second").get<std::vector<int>>();
    ps.bridges = p.at("bridges").get<int>();
    ps.chords = p.at("chords").get<int>();
    rep.pairs.push_back(std::move(ps));
  }

  for (const json& c : j.at("criteria")) {
    CriterionEntry e;
    e.name = c.at("name").get<std::string>();
    e.status = c.at("status").get<std::string>();
    e.nodes = c.at("nodes").get<long long>();
    if (!c.at("selection").is_null())
      e.selection = c.at("selection").get<std::vector<std::array<int, 2>>>();
    if (!c.at("counts").is_null())
      e.counts = c.at("counts").get<std::vector<int>>();
    if (!c.at("a_values").is_null())
      e.a_values = c.at("a_values").get<std::vector<int>>();
    if (!c.at("zero_walk_independence").is_null())
      e.zero_walk_independence = c.at("zero_walk_independence").get<bool>();
    rep.criteria.push_back(std::move(e));
  }

  rep.w_decision.status = j.at("w_decision").at("status").get<std::string>();
  const json& wsel = j.at("w_decision").at("selection");
  if (!wsel.is_null()) {
    std::vector<ConnectorSummary> sel;
    for (const json& c : wsel)
      sel.push_back({c.at("kind").get<std::string>(),
                     c.at("edge").get<std::array<int, 2>>()});
    rep.w_decision.selection = std::move(sel);
  }

  const json& w = j.at("witness");
  if (!w.is_null()) {
    WitnessSummary ws;
    ws.edges = w.at("edges").get<std::vector<std::array<int, 2>>>();
    ws.coeffs = w.at("coeffs").get<std::vector<std::string>>();
    ws.margins = w.at("margins").get<std::vector<std::string>>();
    rep.witness = std::move(ws);
  }

  rep.verdict = j.at("verdict").get<std::string>();
  const json& b = j.at("budgets");
  rep.budgets.cycles = b.at("cycles").get<long long>();
  rep.budgets.criteria_nodes = b.at("criteria_nodes").get<long long>();
  rep.budgets.w_nodes = b.at("w_nodes").get<long long>();
  rep.budgets.lp_calls = b.at("lp_calls").get<long long>();
  rep.budgets.elapsed_ms = b.at("elapsed_ms").get<long long>();
  return rep;
}

namespace {

std::string vertex_seq(const std::vector<int>& vs) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ",";
    out << vs[i];
  }
  out << ")";
  return out.str();
}

std::string edge_text(const std::array<int, 2>& e) {
  return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}";
}

}  // namespace

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "graph: d=" << rep.graph.d << " n=" << rep.graph.n << "\n";
  out << "classification: " << rep.classification.kind;
  if (!rep.pairs.empty()) out << " (p=" << rep.pairs.size() << " pairs)";
  out << "\n";
  if (rep.classification.bridgeless_pair) {
    out << "  bridgeless pair: "
        << vertex_seq((*rep.classification.bridgeless_pair)[0]) << " | "
        << vertex_seq((*rep.classification.bridgeless_pair)[1]) << "\n";
  }
  for (const PairSummary& p : rep.pairs) {
    out << "  pair " << vertex_seq(p.first) << " | " << vertex_seq(p.second)
        << ": " << p.bridges << " bridges, " << p.chords << " chords\n";
  }
  for (const CriterionEntry& c : rep.criteria) {
    out << "criterion " << c.name << ": " << c.status;
    if (c.selection) {
      out << " with bridges";
      for (const auto& e : *c.selection) out << " " << edge_text(e);
    }
    if (c.a_values) {
      out << "; a =";
      for (int a : *c.a_values) out << " " << a;
    }
    if (c.zero_walk_independence)
      out << "; zero walks independent: "
          << (*c.zero_walk_independence ? "yes" : "no");
    out << " [nodes=" << c.nodes << "]\n";
  }
  out << "W: " << rep.w_decision.status << "\n";
  if (rep.w_decision.selection) {
    out << "  selection:";
    for (const ConnectorSummary& c : *rep.w_decision.selection)
      out << " " << edge_text(c.edge) << "(" << c.kind << ")";
    out << "\n";
  }
  if (rep.witness) {
    out << "witness:";
    for (size_t k = 0; k < rep.witness->edges.size(); ++k)
      if (rep.witness->coeffs[k] != "0")
        out << " " << rep.witness->coeffs[k] << "*"
            << edge_text(rep.witness->edges[k]);
    out << "\n  margins:";
    for (const std::string& m : rep.witness->margins) out << " " << m;
    out << "\n";
  }
  out << "verdict: " << rep.verdict << "\n";
  return out.str();
}

int exit_code(const AnalysisReport& rep) {
  if (rep.verdict == "exists" || rep.verdict == "exists-trivially") return 0;
  if (rep.verdict == "does-not-exist" || rep.verdict == "not-FHM") return 1;
  return 2;
}

}  // namespace edgepoly
