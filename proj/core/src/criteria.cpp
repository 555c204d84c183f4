#include "edgepoly/criteria.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace edgepoly {

SelectionContext SelectionContext::build(const Graph& g,
                                         const std::vector<OddCycle>& cycles,
                                         const std::vector<DisjointPair>& pairs) {
  SelectionContext ctx;
  ctx.graph_ = &g;
  ctx.cycles_ = &cycles;
  ctx.pairs_ = &pairs;
  ctx.bridges_.resize(pairs.size());
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    for (const Connector& conn : connectors(g, cycles, pairs, p)) {
      if (conn.kind != ConnectorKind::Bridge) continue;
      BridgeData data;
      data.connector = conn;
      data.walk = even_closed_walk(g, cycles, pairs, conn);
      data.f = inequality_vector(g, data.walk);
      data.walk_edges = DynBitset(g.edge_count());
      data.odd_edges = DynBitset(g.edge_count());
      data.even_edges = DynBitset(g.edge_count());
      for (int e : data.walk.edges) data.walk_edges.insert(e);
      for (int e = 0; e < g.edge_count(); ++e) {
        if (data.f.coeffs[e] == 1) data.odd_edges.insert(e);
        if (data.f.coeffs[e] == -1) data.even_edges.insert(e);
      }
      ctx.bridges_[p].push_back(std::move(data));
    }
  }
  return ctx;
}

int SelectionContext::bridge_position(int pair, int edge) const {
  const auto& list = bridges_.at(pair);
  for (int k = 0; k < static_cast<int>(list.size()); ++k)
    if (list[k].connector.edge == edge) return k;
  return -1;
}

BridgeSelection::BridgeSelection(const SelectionContext& ctx,
                                 std::vector<int> choice)
    : choice_(std::move(choice)), edge_set_(ctx.graph().edge_count()) {
  if (static_cast<int>(choice_.size()) != ctx.pair_count())
    throw std::invalid_argument("selection must choose one bridge per pair");
  for (int p = 0; p < ctx.pair_count(); ++p) {
    const auto& list = ctx.bridges(p);
    if (choice_[p] < 0 || choice_[p] >= static_cast<int>(list.size()))
      throw std::invalid_argument("bridge choice out of range for pair " +
                                  std::to_string(p));
    int e = list[choice_[p]].connector.edge;
    chosen_edges_.push_back(e);
    if (!edge_set_.contains(e)) {
      edge_set_.insert(e);
      edge_list_.push_back(e);
    }
  }
  std::sort(edge_list_.begin(), edge_list_.end());
}

BridgeSelection BridgeSelection::from_edge_choices(
    const SelectionContext& ctx, const std::vector<int>& edges) {
  if (static_cast<int>(edges.size()) != ctx.pair_count())
    throw std::invalid_argument("selection must choose one bridge per pair");
  std::vector<int> choice(edges.size());
  for (int p = 0; p < ctx.pair_count(); ++p) {
    int k = ctx.bridge_position(p, edges[p]);
    if (k < 0)
      throw std::invalid_argument("edge " + std::to_string(edges[p]) +
                                  " is not a bridge of pair " +
                                  std::to_string(p));
    choice[p] = k;
  }
  return BridgeSelection(ctx, std::move(choice));
}

WeightVector standard_weight_vector(const SelectionContext& ctx,
                                    const BridgeSelection& sel) {
  WeightVector w;
  w.weights.assign(ctx.graph().edge_count(), 0);
  for (int e : sel.edge_list()) w.weights[e] = -1;
  return w;
}

namespace {

const SelectionContext::BridgeData& chosen_data(const SelectionContext& ctx,
                                                const BridgeSelection& sel,
                                                int pair) {
  return ctx.bridges(pair)[sel.choice()[pair]];
}

}  // namespace

int other_bridge_count(const SelectionContext& ctx, const BridgeSelection& sel,
                       int pair_index) {
  const auto& data = chosen_data(ctx, sel, pair_index);
  // The pair's own bridge is always a chosen edge on its own walk.
  return sel.edge_set().intersect_count(data.walk_edges) - 1;
}

bool check_cor_2_2(const SelectionContext& ctx, const BridgeSelection& sel) {
  for (int p = 0; p < ctx.pair_count(); ++p)
    if (other_bridge_count(ctx, sel, p) > 1) return false;
  return true;
}

bool check_thm_2_1(const SelectionContext& ctx, const BridgeSelection& sel) {
  int heavy = 0;
  for (int p = 0; p < ctx.pair_count(); ++p) {
    int c = other_bridge_count(ctx, sel, p);
    if (c > 2) return false;
    if (c == 2 && ++heavy > 2) return false;
  }
  return true;
}

std::vector<int> a_values(const SelectionContext& ctx,
                          const BridgeSelection& sel) {
  WeightVector w = standard_weight_vector(ctx, sel);
  std::vector<int> out;
  out.reserve(ctx.pair_count());
  for (int p = 0; p < ctx.pair_count(); ++p) {
    const auto& f = chosen_data(ctx, sel, p).f;
    Rational a = 0;
    for (int e = 0; e < ctx.graph().edge_count(); ++e)
      if (f.coeffs[e] != 0 && w.weights[e] != 0)
        a += f.coeffs[e] * w.weights[e];
    assert(denominator(a) == 1);
    out.push_back(numerator(a).convert_to<int>());
  }
  return out;
}

std::vector<int> a_values_direct(const SelectionContext& ctx,
                                 const BridgeSelection& sel) {
  std::vector<int> out;
  out.reserve(ctx.pair_count());
  for (int p = 0; p < ctx.pair_count(); ++p) {
    const auto& data = chosen_data(ctx, sel, p);
    int a = 2;  // own bridge: weight 2
    a += sel.edge_set().intersect_count(data.even_edges);
    a -= sel.edge_set().intersect_count(data.odd_edges);
    out.push_back(a);
  }
  return out;
}

bool check_cor_2_4(const SelectionContext& ctx, const BridgeSelection& sel) {
  for (int a : a_values(ctx, sel))
    if (a <= 0) return false;
  return true;
}

namespace {

bool linearly_independent_pair(const InequalityVector& f,
                               const InequalityVector& g) {
  // Two nonzero integer vectors are dependent iff proportional.
  size_t n = f.coeffs.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      long long cross = static_cast<long long>(f.coeffs[i]) * g.coeffs[j] -
                        static_cast<long long>(f.coeffs[j]) * g.coeffs[i];
      if (cross != 0) return true;
    }
  return false;
}

}  // namespace

Thm23Result check_thm_2_3(const SelectionContext& ctx,
                          const BridgeSelection& sel) {
  Thm23Result res;
  std::vector<int> a = a_values(ctx, sel);
  bool nonneg = true;
  for (int p = 0; p < ctx.pair_count(); ++p) {
    if (a[p] < 0) nonneg = false;
    if (a[p] == 0) res.zero_pairs.push_back(p);
  }
  res.holds = nonneg && res.zero_pairs.size() <= 2;
  if (res.zero_pairs.size() == 2) {
    const auto& fj = chosen_data(ctx, sel, res.zero_pairs[0]).f;
    const auto& fk = chosen_data(ctx, sel, res.zero_pairs[1]).f;
    res.zero_walk_independence = linearly_independent_pair(fj, fk);
  }
  return res;
}

CriteriaReport evaluate_selection(const SelectionContext& ctx,
                                  const BridgeSelection& sel) {
  CriteriaReport rep;
  for (int p = 0; p < ctx.pair_count(); ++p) {
    rep.choice.push_back(chosen_data(ctx, sel, p).connector.edge);
    rep.other_bridge_counts.push_back(other_bridge_count(ctx, sel, p));
  }
  rep.a_values = a_values(ctx, sel);
  rep.cor_2_2 = check_cor_2_2(ctx, sel);
  rep.thm_2_1 = check_thm_2_1(ctx, sel);
  rep.cor_2_4 = check_cor_2_4(ctx, sel);
  Thm23Result t = check_thm_2_3(ctx, sel);
  rep.thm_2_3 = t.holds;
  rep.zero_walk_independence = t.zero_walk_independence;
  return rep;
}

namespace {

// Backtracking state shared by the criteria searches. Prunes are sound for
// exhaustive "no" answers: chosen edges only accumulate along a branch, so
// other_bridge_count is monotone and each remaining pair can move any a_i
// by at most one.
class SelectionSearch {
 public:
  SelectionSearch(const SelectionContext& ctx, Criterion crit,
                  long long budget)
      : ctx_(ctx), crit_(crit), budget_(budget) {}

  SearchOutcome run() {
    int p = ctx_.pair_count();
    order_.resize(p);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      auto ka = std::pair(ctx_.bridges(a).size(), a);
      auto kb = std::pair(ctx_.bridges(b).size(), b);
      return ka < kb;
    });

    // suffix_candidates_[k]: edges any pair at depth >= k could still choose.
    suffix_candidates_.assign(p + 1, DynBitset(ctx_.graph().edge_count()));
    for (int k = p - 1; k >= 0; --k) {
      suffix_candidates_[k] = suffix_candidates_[k + 1];
      for (const auto& bd : ctx_.bridges(order_[k]))
        suffix_candidates_[k].insert(bd.connector.edge);
    }

    edge_times_.assign(ctx_.graph().edge_count(), 0);
    eset_ = DynBitset(ctx_.graph().edge_count());
    chosen_.assign(p, -1);

    SearchOutcome out;
    out.nodes = 0;
    bool exhausted = dfs(0, out);
    if (out.selection) {
      out.status = SearchOutcome::Status::Found;
    } else {
      out.status = exhausted ? SearchOutcome::Status::ExhaustedNone
                             : SearchOutcome::Status::BudgetExceeded;
    }
    return out;
  }

 private:
  // Returns true when the subtree was fully covered (not cut by budget).
  bool dfs(int depth, SearchOutcome& out) {
    if (depth == ctx_.pair_count()) {
      std::vector<int> choice(chosen_.begin(), chosen_.end());
      BridgeSelection sel(ctx_, std::move(choice));
      if (passes_exact(sel)) out.selection = std::move(sel);
      return true;
    }
    int pair = order_[depth];
    const auto& cands = ctx_.bridges(pair);

    // Prefer edges already chosen: maximal sharing keeps walks clean.
    std::vector<int> idx(cands.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return eset_.contains(cands[a].connector.edge) >
             eset_.contains(cands[b].connector.edge);
    });

    for (int k : idx) {
      if (++out.nodes > budget_) return false;
      int edge = cands[k].connector.edge;
      chosen_[pair] = k;
      if (edge_times_[edge]++ == 0) eset_.insert(edge);
      bool viable = prune_ok(depth + 1);
      if (viable) {
        if (!dfs(depth + 1, out)) return false;
        if (out.selection) return true;
      }
      if (--edge_times_[edge] == 0) eset_.erase(edge);
      chosen_[pair] = -1;
    }
    return true;
  }

  // Check all pairs assigned so far against bounds that any completion of
  // the current partial selection must respect.
  bool prune_ok(int depth_done) const {
    int remaining = ctx_.pair_count() - depth_done;
    const DynBitset& future = suffix_candidates_[depth_done];
    int heavy = 0;        // walks that already contain >= 2 other bridges
    int forced_zero = 0;  // walks whose a_i can no longer exceed 0

    for (int d = 0; d < depth_done; ++d) {
      int pair = order_[d];
      const auto& data = ctx_.bridges(pair)[chosen_[pair]];
      switch (crit_) {
        case Criterion::Cor22:
        case Criterion::Thm21: {
          int count = eset_.intersect_count(data.walk_edges) - 1;
          int limit = crit_ == Criterion::Cor22 ? 1 : 2;
          if (count > limit) return false;
          if (crit_ == Criterion::Thm21 && count >= 2 && ++heavy > 2)
            return false;
          break;
        }
        case Criterion::Cor24:
        case Criterion::Thm23: {
          int a = 2 + eset_.intersect_count(data.even_edges) -
                  eset_.intersect_count(data.odd_edges);
          // Future choices can raise a_i by at most one per remaining pair,
          // and only via even-numbered edges not chosen yet.
          int up = std::min(
              remaining,
              data.even_edges.intersect_count_excluding(future, eset_));
          int best = a + up;
          if (crit_ == Criterion::Cor24) {
            if (best < 1) return false;
          } else {
            if (best < 0) return false;
            if (best <= 0 && ++forced_zero > 2) return false;
          }
          break;
        }
      }
    }
    return true;
  }

  bool passes_exact(const BridgeSelection& sel) const {
    switch (crit_) {
      case Criterion::Cor22:
        return check_cor_2_2(ctx_, sel);
      case Criterion::Thm21:
        return check_thm_2_1(ctx_, sel);
      case Criterion::Cor24:
        return check_cor_2_4(ctx_, sel);
      case Criterion::Thm23:
        return check_thm_2_3(ctx_, sel).holds;
    }
    return false;
  }

  const SelectionContext& ctx_;
  Criterion crit_;
  long long budget_;
  std::vector<int> order_;
  std::vector<DynBitset> suffix_candidates_;
  std::vector<int> chosen_;
  std::vector<int> edge_times_;
  DynBitset eset_;
};

}  // namespace

SearchOutcome search_selection(const SelectionContext& ctx, Criterion crit,
                               long long budget) {
  if (ctx.pair_count() == 0)
    throw std::invalid_argument("criteria need at least one disjoint pair");
  for (int p = 0; p < ctx.pair_count(); ++p)
    if (ctx.bridges(p).empty())
      throw std::invalid_argument("pair " + std::to_string(p) +
                                  " has no bridge; graph is not FHM");
  return SelectionSearch(ctx, crit, budget).run();
}

long long for_each_selection(
    const SelectionContext& ctx, long long cap,
    const std::function<bool(const BridgeSelection&)>& fn) {
  int p = ctx.pair_count();
  std::vector<int> choice(p, 0);
  long long seen = 0;
  for (;;) {
    BridgeSelection sel(ctx, choice);
    ++seen;
    if (!fn(sel) || seen >= cap) return seen;
    int k = p - 1;
    while (k >= 0 &&
           choice[k] + 1 == static_cast<int>(ctx.bridges(k).size())) {
      choice[k] = 0;
      --k;
    }
    if (k < 0) return seen;
    ++choice[k];
  }
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Cor22:
      return "cor_2_2";
    case Criterion::Thm21:
      return "thm_2_1";
    case Criterion::Cor24:
      return "cor_2_4";
    case Criterion::Thm23:
      return "thm_2_3";
  }
  return "?";
}

}  // namespace edgepoly
