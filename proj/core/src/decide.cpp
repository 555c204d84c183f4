#include "edgepoly/decide.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edgepoly {

OpenCone cone_of_bridge_selection(const SelectionContext& ctx,
                                  const BridgeSelection& sel) {
  OpenCone cone;
  for (int p = 0; p < ctx.pair_count(); ++p) {
    const auto& data = ctx.bridges(p)[sel.choice()[p]];
    cone.rows.push_back(data.f);
    cone.provenance.push_back(data.connector);
  }
  return cone;
}

OpenCone cone_of_connectors(const Graph& g, const std::vector<OddCycle>& cycles,
                            const std::vector<DisjointPair>& pairs,
                            const std::vector<Connector>& selection,
                            bool all_orientations) {
  OpenCone cone;
  for (const Connector& conn : selection) {
    if (all_orientations) {
      for (auto& f : inequality_vector_variants(g, cycles, pairs, conn))
        cone.rows.push_back(std::move(f));
    } else {
      cone.rows.push_back(
          inequality_vector(g, even_closed_walk(g, cycles, pairs, conn)));
    }
    cone.provenance.push_back(conn);
  }
  return cone;
}

namespace {

// DFS over per-pair connector choices with partial-cone feasibility
// pruning: a superset of an infeasible system stays infeasible, so an
// exhausted tree is a definitive W = 0.
class ConeSearch {
 public:
  ConeSearch(const Graph& g, const std::vector<OddCycle>& cycles,
             const std::vector<DisjointPair>& pairs, const DecideOptions& opts)
      : g_(g), cycles_(cycles), pairs_(pairs), opts_(opts) {
    conns_.resize(pairs.size());
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
      conns_[p] = connectors(g, cycles, pairs, p);
    order_.resize(pairs.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return std::pair(conns_[a].size(), a) < std::pair(conns_[b].size(), b);
    });
  }

  WDecision run(long long start_nodes) {
    WDecision out;
    out.nodes = start_nodes;
    bool exhausted = dfs(0, out);
    if (out.witness)
      out.status = WDecision::Status::Nonempty;
    else
      out.status = exhausted ? WDecision::Status::Empty
                             : WDecision::Status::BudgetExceeded;
    return out;
  }

 private:
  bool dfs(int depth, WDecision& out) {
    if (depth == static_cast<int>(order_.size())) {
      OpenCone cone{rows_, stack_};
      ++out.lp_calls;
      if (auto w = strict_feasible(cone)) {
        out.witness = std::move(w);
        out.selection = stack_;
      }
      return true;
    }
    int pair = order_[depth];
    for (const Connector& conn : conns_[pair]) {
      if (++out.nodes > opts_.budget) return false;
      size_t mark = rows_.size();
      if (opts_.all_orientations) {
        for (auto& f : inequality_vector_variants(g_, cycles_, pairs_, conn))
          rows_.push_back(std::move(f));
      } else {
        rows_.push_back(inequality_vector(
            g_, even_closed_walk(g_, cycles_, pairs_, conn)));
      }
      stack_.push_back(conn);

      ++out.lp_calls;
      bool viable = strict_feasible(OpenCone{rows_, {}}).has_value();
      if (viable) {
        if (!dfs(depth + 1, out)) return false;
        if (out.witness) return true;
      }
      rows_.resize(mark);
      stack_.pop_back();
    }
    return true;
  }

  const Graph& g_;
  const std::vector<OddCycle>& cycles_;
  const std::vector<DisjointPair>& pairs_;
  DecideOptions opts_;
  std::vector<std::vector<Connector>> conns_;
  std::vector<int> order_;
  std::vector<InequalityVector> rows_;
  std::vector<Connector> stack_;
};

}  // namespace

WDecision decide_W(const Graph& g, const Classification& cls,
                   const DecideOptions& opts) {
  if (cls.kind != GraphClass::FundamentalFHM)
    throw std::invalid_argument(
        "decide_W requires a fundamental FHM graph (Thm 1.1 already settles "
        "the other classes)");

  long long nodes = 0;
  if (opts.criteria_guidance) {
    SelectionContext ctx = SelectionContext::build(g, cls.cycles, cls.pairs);

    // Cor 2.4 pass: the standard weight vector is itself the witness.
    SearchOutcome cor24 = search_selection(ctx, Criterion::Cor24, opts.budget);
    nodes += cor24.nodes;
    if (cor24.status == SearchOutcome::Status::Found) {
      OpenCone cone = cone_of_bridge_selection(ctx, *cor24.selection);
      WeightVector w = standard_weight_vector(ctx, *cor24.selection);
      WDecision out;
      out.status = WDecision::Status::Nonempty;
      out.selection = cone.provenance;
      out.witness = Witness::verified(cone.rows, w.weights);
      out.nodes = nodes;
      return out;
    }

    // Thm 2.3 pass: the LP realizes the perturbation of the proof.
    SearchOutcome thm23 = search_selection(ctx, Criterion::Thm23, opts.budget);
    nodes += thm23.nodes;
    if (thm23.status == SearchOutcome::Status::Found) {
      OpenCone cone = cone_of_bridge_selection(ctx, *thm23.selection);
      if (auto w = strict_feasible(cone)) {
        WDecision out;
        out.status = WDecision::Status::Nonempty;
        out.selection = cone.provenance;
        out.witness = std::move(w);
        out.nodes = nodes;
        out.lp_calls = 1;
        return out;
      }
      // A Thm 2.3 selection with an empty cone would contradict the
      // theorem; fall through to the full search rather than trust either.
    }
  }

  return ConeSearch(g, cls.cycles, cls.pairs, opts).run(nodes);
}

bool remark_2_5_restricted_check(const SelectionContext& ctx,
                                 const BridgeSelection& sel,
                                 const std::vector<int>& zero_pairs,
                                 const WeightVector& w) {
  if (zero_pairs.size() < 3)
    throw BadZeroSet("remark 2.5(i) needs r >= 3 zero walks; got " +
                     std::to_string(zero_pairs.size()));
  std::vector<int> a = a_values(ctx, sel);
  std::vector<int> actual_zeros;
  for (int p = 0; p < ctx.pair_count(); ++p) {
    if (a[p] == 0)
      actual_zeros.push_back(p);
    else if (a[p] < 0)
      throw BadZeroSet("a_" + std::to_string(p) + " = " +
                       std::to_string(a[p]) + " is negative");
  }
  std::vector<int> given = zero_pairs;
  std::sort(given.begin(), given.end());
  if (given != actual_zeros)
    throw BadZeroSet("zero_pairs does not match the pairs with a_i = 0");

  std::vector<InequalityVector> zero_rows;
  for (int p : zero_pairs) {
    const auto& f = ctx.bridges(p)[sel.choice()[p]].f;
    // The zero rows must lie in the hyperplane {x : w.x = 0}.
    Rational dot = 0;
    for (size_t k = 0; k < f.coeffs.size(); ++k)
      if (f.coeffs[k] != 0) dot += f.coeffs[k] * w.weights[k];
    if (dot != 0)
      throw BadZeroSet("zero walk row is not inside the hyperplane of w");
    zero_rows.push_back(f);
  }
  return dual_cone_pointed(zero_rows);
}

}  // namespace edgepoly
