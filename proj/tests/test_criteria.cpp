#include <algorithm>
#include <doctest.h>
#include <map>
#include <random>
#include <set>

#include "edgepoly/criteria.hpp"
#include "edgepoly/cycles.hpp"

using namespace edgepoly;

namespace {

struct Fixture {
  Graph g;
  Classification cls;
  SelectionContext ctx;

  explicit Fixture(Graph graph)
      : g(std::move(graph)),
        cls(classify(g)),
        ctx(SelectionContext::build(g, cls.cycles, cls.pairs)) {}
};

int find_pair(const Fixture& f, std::vector<int> a, std::vector<int> b) {
  for (int p = 0; p < static_cast<int>(f.cls.pairs.size()); ++p) {
    const auto& x = f.cls.cycles[f.cls.pairs[p].first].vertices;
    const auto& y = f.cls.cycles[f.cls.pairs[p].second].vertices;
    if ((x == a && y == b) || (x == b && y == a)) return p;
  }
  REQUIRE(false);
  return -1;
}

using PairKey = std::pair<std::vector<int>, std::vector<int>>;

// Selection frozen as {first,second} -> bridge {u,v}.
BridgeSelection selection_from_map(
    const Fixture& f, const std::map<PairKey, std::pair<int, int>>& m) {
  std::vector<int> edges(f.cls.pairs.size(), -1);
  for (const auto& [key, bridge] : m) {
    int p = find_pair(f, key.first, key.second);
    edges[p] = f.g.edge_index(bridge.first, bridge.second);
    REQUIRE(edges[p] >= 0);
  }
  for (int e : edges) REQUIRE(e >= 0);
  return BridgeSelection::from_edge_choices(f.ctx, edges);
}

// K6: pick for each pair the first of the Thm 3.2 edges that bridges it.
BridgeSelection k6_matching_selection(const Fixture& f) {
  std::vector<int> edges;
  const std::pair<int, int> cand[] = {{1, 2}, {3, 4}, {5, 6}};
  for (int p = 0; p < f.ctx.pair_count(); ++p) {
    int chosen = -1;
    for (auto [u, v] : cand) {
      int e = f.g.edge_index(u, v);
      if (f.ctx.bridge_position(p, e) >= 0) {
        chosen = e;
        break;
      }
    }
    REQUIRE(chosen >= 0);
    edges.push_back(chosen);
  }
  return BridgeSelection::from_edge_choices(f.ctx, edges);
}

const std::map<PairKey, std::pair<int, int>> kOneZeroSelection = {
    {{{1, 2, 3}, {4, 5, 6}}, {3, 4}}, {{{1, 2, 4}, {3, 5, 6}}, {3, 4}},
    {{{1, 2, 5}, {3, 4, 6}}, {1, 6}}, {{{1, 2, 6}, {3, 4, 5}}, {2, 4}},
    {{{1, 3, 4}, {2, 5, 6}}, {4, 5}}, {{{1, 3, 5}, {2, 4, 6}}, {3, 4}},
    {{{1, 3, 6}, {2, 4, 5}}, {1, 5}}, {{{1, 4, 5}, {2, 3, 6}}, {1, 6}},
    {{{1, 4, 6}, {2, 3, 5}}, {4, 5}}, {{{1, 5, 6}, {2, 3, 4}}, {3, 6}},
};

const std::map<PairKey, std::pair<int, int>> kTwoZeroSelection = {
    {{{1, 2, 3}, {4, 5, 6}}, {3, 5}}, {{{1, 2, 4}, {3, 5, 6}}, {2, 6}},
    {{{1, 2, 5}, {3, 4, 6}}, {4, 5}}, {{{1, 2, 6}, {3, 4, 5}}, {2, 4}},
    {{{1, 3, 4}, {2, 5, 6}}, {1, 5}}, {{{1, 3, 5}, {2, 4, 6}}, {1, 4}},
    {{{1, 3, 6}, {2, 4, 5}}, {5, 6}}, {{{1, 4, 5}, {2, 3, 6}}, {3, 5}},
    {{{1, 4, 6}, {2, 3, 5}}, {1, 5}}, {{{1, 5, 6}, {2, 3, 4}}, {3, 5}},
};

const std::map<PairKey, std::pair<int, int>> kThreeZeroSelection = {
    {{{1, 2, 3}, {4, 5, 6}}, {2, 6}}, {{{1, 2, 4}, {3, 5, 6}}, {2, 6}},
    {{{1, 2, 5}, {3, 4, 6}}, {4, 5}}, {{{1, 2, 6}, {3, 4, 5}}, {1, 4}},
    {{{1, 3, 4}, {2, 5, 6}}, {1, 5}}, {{{1, 3, 5}, {2, 4, 6}}, {4, 5}},
    {{{1, 3, 6}, {2, 4, 5}}, {4, 6}}, {{{1, 4, 5}, {2, 3, 6}}, {4, 6}},
    {{{1, 4, 6}, {2, 3, 5}}, {4, 5}}, {{{1, 5, 6}, {2, 3, 4}}, {2, 6}},
};

Graph octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      bool matching = (i == 1 && j == 2) || (i == 3 && j == 4) ||
                      (i == 5 && j == 6);
      if (!matching) edges.push_back({i, j});
    }
  return Graph::from_edges(edges);
}

Graph chorded_pair_fixture() {
  return Graph::from_edges({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3},
                            {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10}, {1, 6}});
}

void check_implications(const SelectionContext& ctx,
                        const BridgeSelection& sel) {
  bool c22 = check_cor_2_2(ctx, sel);
  bool t21 = check_thm_2_1(ctx, sel);
  bool c24 = check_cor_2_4(ctx, sel);
  bool t23 = check_thm_2_3(ctx, sel).holds;
  if (c22) CHECK(t21);
  if (t21) CHECK(t23);
  if (c24) CHECK(t23);
  CHECK(a_values(ctx, sel) == a_values_direct(ctx, sel));
}

}  // namespace

TEST_CASE("other_bridge_count: single pair, shared bridges, K6 oracle") {
  Fixture single(Graph::two_odd_cycles_bridged(3, 3));
  BridgeSelection only(single.ctx, {0});
  CHECK(other_bridge_count(single.ctx, only, 0) == 0);

  // Both pairs of the chorded fixture have {1,6} as their only bridge:
  // sharing means no pair sees another bridge.
  Fixture shared(chorded_pair_fixture());
  REQUIRE(shared.ctx.pair_count() == 2);
  BridgeSelection both(shared.ctx, {0, 0});
  CHECK(shared.g.edge(both.chosen_edge(0)) == Edge{1, 6});
  CHECK(both.edge_list().size() == 1);
  for (int p = 0; p < 2; ++p) CHECK(other_bridge_count(shared.ctx, both, p) == 0);

  // Thm 3.2 selection on K6, pair ({1,3,5},{2,4,6}) with bridge {1,2}:
  // explicit walk listing shows neither {3,4} nor {5,6} lies on it.
  Fixture k6(Graph::complete(6));
  BridgeSelection sel = k6_matching_selection(k6);
  int p = find_pair(k6, {1, 3, 5}, {2, 4, 6});
  CHECK(k6.g.edge(sel.chosen_edge(p)) == Edge{1, 2});
  std::set<std::pair<int, int>> walk_edges = {{1, 3}, {3, 5}, {1, 5}, {2, 4},
                                              {4, 6}, {2, 6}, {1, 2}};
  int expect = 0;
  for (auto [u, v] : std::vector<std::pair<int, int>>{{3, 4}, {5, 6}})
    if (walk_edges.count({u, v})) ++expect;
  CHECK(expect == 0);
  CHECK(other_bridge_count(k6.ctx, sel, p) == expect);

  // ...while pair ({1,2,3},{4,5,6}) picks up both other matching edges.
  int q = find_pair(k6, {1, 2, 3}, {4, 5, 6});
  CHECK(other_bridge_count(k6.ctx, sel, q) == 2);
}

TEST_CASE("Thm 3.2 selection: a_i >= 2 on all ten pairs, Cor 2.4 holds") {
  Fixture k6(Graph::complete(6));
  BridgeSelection sel = k6_matching_selection(k6);
  CHECK(sel.edge_list().size() == 3);

  std::vector<int> a = a_values(k6.ctx, sel);
  REQUIRE(a.size() == 10);
  for (int v : a) CHECK(v >= 2);
  std::multiset<int> dist(a.begin(), a.end());
  CHECK(dist == std::multiset<int>{2, 2, 2, 2, 4, 4, 4, 4, 4, 4});

  CHECK(check_cor_2_4(k6.ctx, sel));
  CHECK(check_thm_2_3(k6.ctx, sel).holds);
  CHECK_FALSE(check_cor_2_2(k6.ctx, sel));
  CHECK_FALSE(check_thm_2_1(k6.ctx, sel));  // six walks carry two others

  WeightVector w = standard_weight_vector(k6.ctx, sel);
  int minus_ones = 0;
  for (const Rational& x : w.weights) {
    CHECK((x == 0 || x == -1));
    if (x == -1) ++minus_ones;
  }
  CHECK(minus_ones == 3);
  CHECK(w.weights[k6.g.edge_index(1, 2)] == -1);
  CHECK(w.weights[k6.g.edge_index(3, 4)] == -1);
  CHECK(w.weights[k6.g.edge_index(5, 6)] == -1);
}

TEST_CASE("standard weight vector: single bridge and shared-edge semantics") {
  Fixture single(Graph::two_odd_cycles_bridged(3, 3));
  BridgeSelection only(single.ctx, {0});
  WeightVector w = standard_weight_vector(single.ctx, only);
  for (int e = 0; e < single.g.edge_count(); ++e) {
    if (e == single.g.edge_index(1, 4))
      CHECK(w.weights[e] == -1);
    else
      CHECK(w.weights[e] == 0);
  }
  CHECK(a_values(single.ctx, only) == std::vector<int>{2});

  Fixture shared(chorded_pair_fixture());
  BridgeSelection both(shared.ctx, {0, 0});
  WeightVector ws = standard_weight_vector(shared.ctx, both);
  int minus = 0;
  for (const Rational& x : ws.weights)
    if (x == -1) ++minus;
  CHECK(minus == 1);  // set semantics: one distinct edge
}

TEST_CASE("frozen K6 selection with exactly one zero walk") {
  Fixture k6(Graph::complete(6));
  BridgeSelection sel = selection_from_map(k6, kOneZeroSelection);
  std::vector<int> a = a_values(k6.ctx, sel);
  int zero_pair = find_pair(k6, {1, 2, 4}, {3, 5, 6});
  for (int p = 0; p < 10; ++p) {
    if (p == zero_pair)
      CHECK(a[p] == 0);
    else
      CHECK(a[p] > 0);
  }
  CHECK_FALSE(check_cor_2_4(k6.ctx, sel));
  Thm23Result t = check_thm_2_3(k6.ctx, sel);
  CHECK(t.holds);
  CHECK(t.zero_pairs == std::vector<int>{zero_pair});
  CHECK_FALSE(t.zero_walk_independence.has_value());

  // The zero walk realizes a_i = 2 - 1 - 1: two other chosen bridges, both
  // odd-numbered.
  const auto& data = k6.ctx.bridges(zero_pair)[sel.choice()[zero_pair]];
  CHECK(sel.edge_set().intersect_count(data.odd_edges) == 2);
  CHECK(sel.edge_set().intersect_count(data.even_edges) == 0);
}

TEST_CASE("frozen K6 selection with two zero walks reports independence") {
  Fixture k6(Graph::complete(6));
  BridgeSelection sel = selection_from_map(k6, kTwoZeroSelection);
  Thm23Result t = check_thm_2_3(k6.ctx, sel);
  CHECK(t.holds);
  REQUIRE(t.zero_pairs.size() == 2);
  REQUIRE(t.zero_walk_independence.has_value());
  CHECK(*t.zero_walk_independence);
  CHECK_FALSE(check_cor_2_4(k6.ctx, sel));
}

TEST_CASE("frozen K6 selection with three zero walks fails Thm 2.3") {
  Fixture k6(Graph::complete(6));
  BridgeSelection sel = selection_from_map(k6, kThreeZeroSelection);
  std::vector<int> a = a_values(k6.ctx, sel);
  CHECK(std::count(a.begin(), a.end(), 0) == 3);
  CHECK(*std::min_element(a.begin(), a.end()) == 0);
  Thm23Result t = check_thm_2_3(k6.ctx, sel);
  CHECK_FALSE(t.holds);
  CHECK(t.zero_pairs.size() == 3);
}

TEST_CASE("octahedron boundary selection: exactly two walks at count 2") {
  Fixture oct(octahedron());
  REQUIRE(oct.ctx.pair_count() == 4);
  BridgeSelection sel = selection_from_map(
      oct, {{{{1, 3, 5}, {2, 4, 6}}, {1, 4}},
            {{{1, 3, 6}, {2, 4, 5}}, {1, 4}},
            {{{1, 4, 5}, {2, 3, 6}}, {1, 3}},
            {{{1, 4, 6}, {2, 3, 5}}, {1, 5}}});
  std::vector<int> counts;
  for (int p = 0; p < 4; ++p)
    counts.push_back(other_bridge_count(oct.ctx, sel, p));
  std::multiset<int> dist(counts.begin(), counts.end());
  CHECK(dist == std::multiset<int>{1, 1, 2, 2});
  CHECK(check_thm_2_1(oct.ctx, sel));
  CHECK_FALSE(check_cor_2_2(oct.ctx, sel));
  CHECK(check_thm_2_3(oct.ctx, sel).holds);
}

TEST_CASE("K9 adversarial selection puts two chosen bridges on one walk") {
  Fixture k9(Graph::complete(9));
  REQUIRE(k9.ctx.pair_count() == 6888);

  int target = find_pair(k9, {1, 2, 3}, {4, 5, 6});
  int pa = find_pair(k9, {1, 4, 7}, {2, 5, 8});
  int pb = find_pair(k9, {1, 5, 7}, {2, 6, 8});

  std::vector<int> choice(k9.ctx.pair_count(), 0);
  choice[target] = k9.ctx.bridge_position(target, k9.g.edge_index(3, 4));
  choice[pa] = k9.ctx.bridge_position(pa, k9.g.edge_index(1, 2));
  choice[pb] = k9.ctx.bridge_position(pb, k9.g.edge_index(5, 6));
  REQUIRE(choice[target] >= 0);
  REQUIRE(choice[pa] >= 0);
  REQUIRE(choice[pb] >= 0);

  BridgeSelection sel(k9.ctx, choice);
  // {1,2} and {5,6} are triangle edges of the target pair, so they sit on
  // its walk while belonging to the selected edge set.
  const auto& data = k9.ctx.bridges(target)[sel.choice()[target]];
  CHECK(data.walk_edges.contains(k9.g.edge_index(1, 2)));
  CHECK(data.walk_edges.contains(k9.g.edge_index(5, 6)));
  CHECK(other_bridge_count(k9.ctx, sel, target) >= 2);
  CHECK_FALSE(check_cor_2_2(k9.ctx, sel));
}

TEST_CASE("searches on K6: Cor 2.4 finds, Thm 2.1 and Cor 2.2 exhaust") {
  Fixture k6(Graph::complete(6));

  SearchOutcome c24 = search_selection(k6.ctx, Criterion::Cor24);
  REQUIRE(c24.status == SearchOutcome::Status::Found);
  CHECK(check_cor_2_4(k6.ctx, *c24.selection));
  CHECK(c24.selection->edge_list().size() >= 3);

  SearchOutcome t23 = search_selection(k6.ctx, Criterion::Thm23);
  REQUIRE(t23.status == SearchOutcome::Status::Found);
  CHECK(check_thm_2_3(k6.ctx, *t23.selection).holds);

  SearchOutcome t21 = search_selection(k6.ctx, Criterion::Thm21);
  CHECK(t21.status == SearchOutcome::Status::ExhaustedNone);

  SearchOutcome c22 = search_selection(k6.ctx, Criterion::Cor22);
  CHECK(c22.status == SearchOutcome::Status::ExhaustedNone);
  CHECK(c22.nodes < t21.nodes);  // the tighter criterion prunes harder
}

TEST_CASE("search budget produces the inconclusive outcome, never a no") {
  Fixture k6(Graph::complete(6));
  SearchOutcome out = search_selection(k6.ctx, Criterion::Thm21, 50);
  CHECK(out.status == SearchOutcome::Status::BudgetExceeded);
  CHECK_FALSE(out.selection.has_value());
  CHECK(out.nodes >= 50);
}

TEST_CASE("unique selection of the bridged triangles passes Cor 2.2") {
  Fixture single(Graph::two_odd_cycles_bridged(3, 3));
  SearchOutcome out = search_selection(single.ctx, Criterion::Cor22);
  REQUIRE(out.status == SearchOutcome::Status::Found);
  CHECK(single.g.edge(out.selection->chosen_edge(0)) == Edge{1, 4});
  CHECK(check_cor_2_2(single.ctx, *out.selection));
}

TEST_CASE("Lemma 3.1: K6 selections use at least three distinct bridges") {
  Fixture k6(Graph::complete(6));
  for_each_selection(k6.ctx, 20000, [&](const BridgeSelection& sel) {
    CHECK(sel.edge_list().size() >= 3);
    return true;
  });

  // Directed form: every 1- or 2-edge candidate set leaves a pair
  // bridgeless, so such selections fail validity outright.
  int n = k6.g.edge_count();
  auto covers_all = [&](const std::vector<int>& edges) {
    for (int p = 0; p < k6.ctx.pair_count(); ++p) {
      bool covered = false;
      for (int e : edges)
        if (k6.ctx.bridge_position(p, e) >= 0) covered = true;
      if (!covered) return false;
    }
    return true;
  };
  for (int e = 0; e < n; ++e) CHECK_FALSE(covers_all({e}));
  for (int e1 = 0; e1 < n; ++e1)
    for (int e2 = e1 + 1; e2 < n; ++e2) CHECK_FALSE(covers_all({e1, e2}));
}

TEST_CASE("count monotonicity along extension sequences") {
  Fixture k6(Graph::complete(6));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> choice;
    for (int p = 0; p < k6.ctx.pair_count(); ++p)
      choice.push_back(static_cast<int>(rng() % k6.ctx.bridges(p).size()));

    // Rebuild the growing edge set one pair at a time; the count each walk
    // sees must never decrease. This is the fact the search pruner uses.
    DynBitset eset(k6.g.edge_count());
    std::vector<int> last(k6.ctx.pair_count(), -1);
    for (int k = 0; k < k6.ctx.pair_count(); ++k) {
      eset.insert(k6.ctx.bridges(k)[choice[k]].connector.edge);
      for (int i = 0; i <= k; ++i) {
        const auto& data = k6.ctx.bridges(i)[choice[i]];
        int count = eset.intersect_count(data.walk_edges) - 1;
        CHECK(count >= last[i]);
        last[i] = count;
      }
    }
    // Final prefix counts equal the full-selection counts.
    BridgeSelection sel(k6.ctx, choice);
    for (int i = 0; i < k6.ctx.pair_count(); ++i)
      CHECK(last[i] == other_bridge_count(k6.ctx, sel, i));
  }
}

TEST_CASE("implication chain and dual a-value routes on many selections") {
  Fixture k6(Graph::complete(6));
  std::mt19937 rng(20240202);
  for_each_selection(k6.ctx, 3000, [&](const BridgeSelection& sel) {
    check_implications(k6.ctx, sel);
    return true;
  });
  for (int i = 0; i < 2000; ++i) {
    std::vector<int> choice;
    for (int p = 0; p < k6.ctx.pair_count(); ++p)
      choice.push_back(static_cast<int>(rng() % k6.ctx.bridges(p).size()));
    check_implications(k6.ctx, BridgeSelection(k6.ctx, choice));
  }

  Fixture oct(octahedron());
  for_each_selection(oct.ctx, 1 << 30, [&](const BridgeSelection& sel) {
    check_implications(oct.ctx, sel);  // all 6^4 selections
    return true;
  });
}
