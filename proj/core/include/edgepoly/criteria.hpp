#ifndef EDGEPOLY_CRITERIA_HPP
#define EDGEPOLY_CRITERIA_HPP

#include <functional>
#include <optional>
#include <vector>

#include "edgepoly/rational.hpp"
#include "edgepoly/walks.hpp"

namespace edgepoly {

/// Precomputed per-pair bridge data for criteria evaluation and search.
/// Holds references to the caller's graph and classification results, which
/// must outlive the context.
class SelectionContext {
 public:
  struct BridgeData {
    Connector connector;
    EvenClosedWalk walk;
    InequalityVector f;
    DynBitset walk_edges;  // every edge of the walk
    DynBitset odd_edges;   // f[e] = +1 (odd-numbered once)
    DynBitset even_edges;  // f[e] = -1 (even-numbered once)
  };

  static SelectionContext build(const Graph& g,
                                const std::vector<OddCycle>& cycles,
                                const std::vector<DisjointPair>& pairs);

  const Graph& graph() const { return *graph_; }
  const std::vector<OddCycle>& cycles() const { return *cycles_; }
  const std::vector<DisjointPair>& pairs() const { return *pairs_; }
  int pair_count() const { return static_cast<int>(bridges_.size()); }

  const std::vector<BridgeData>& bridges(int pair) const {
    return bridges_.at(pair);
  }
  /// Index into bridges(pair) of the given edge, or -1.
  int bridge_position(int pair, int edge) const;

 private:
  const Graph* graph_ = nullptr;
  const std::vector<OddCycle>* cycles_ = nullptr;
  const std::vector<DisjointPair>* pairs_ = nullptr;
  std::vector<std::vector<BridgeData>> bridges_;
};

/// One chosen bridge per disjoint pair; the unit the four criteria judge.
/// Distinct-edge set semantics: pairs sharing an edge contribute one bridge.
class BridgeSelection {
 public:
  /// choice[p] indexes into ctx.bridges(p).
  BridgeSelection(const SelectionContext& ctx, std::vector<int> choice);

  /// Build from one edge index per pair; each must be a bridge of its pair.
  static BridgeSelection from_edge_choices(const SelectionContext& ctx,
                                           const std::vector<int>& edges);

  const std::vector<int>& choice() const { return choice_; }
  int chosen_edge(int pair) const { return chosen_edges_.at(pair); }
  const std::vector<int>& chosen_edges() const { return chosen_edges_; }
  const std::vector<int>& edge_list() const { return edge_list_; }
  const DynBitset& edge_set() const { return edge_set_; }

 private:
  std::vector<int> choice_;
  std::vector<int> chosen_edges_;  // edge per pair
  std::vector<int> edge_list_;     // sorted distinct chosen edges
  DynBitset edge_set_;
};

/// Rational weight vector over edges. The standard weight vector of a
/// selection is -1 exactly on the chosen bridge edges.
struct WeightVector {
  std::vector<Rational> weights;
};

WeightVector standard_weight_vector(const SelectionContext& ctx,
                                    const BridgeSelection& sel);

/// |distinct chosen edges other than the pair's own bridge that lie on the
/// pair's even closed walk|.
int other_bridge_count(const SelectionContext& ctx, const BridgeSelection& sel,
                       int pair_index);

/// Every walk contains at most one other chosen bridge.
bool check_cor_2_2(const SelectionContext& ctx, const BridgeSelection& sel);

/// Every count <= 2 and at most two walks have exactly two.
bool check_thm_2_1(const SelectionContext& ctx, const BridgeSelection& sel);

/// a_i = (f_i, w) with w the standard weight vector; computed exactly.
std::vector<int> a_values(const SelectionContext& ctx,
                          const BridgeSelection& sel);

/// Independent route: the prose weight reading (own bridge 2, other chosen
/// bridge +1 if even-numbered on the walk, -1 if odd-numbered).
std::vector<int> a_values_direct(const SelectionContext& ctx,
                                 const BridgeSelection& sel);

/// All a_i > 0.
bool check_cor_2_4(const SelectionContext& ctx, const BridgeSelection& sel);

struct Thm23Result {
  bool holds = false;
  std::vector<int> zero_pairs;  // pair indices with a_i = 0
  // Reported when exactly two zeros: whether {f_j, f_k} are linearly
  // independent (checked, not assumed).
  std::optional<bool> zero_walk_independence;
};

/// All a_i >= 0 and at most two zeros.
Thm23Result check_thm_2_3(const SelectionContext& ctx,
                          const BridgeSelection& sel);

/// Everything the report needs about one selection.
struct CriteriaReport {
  std::vector<int> choice;  // bridge edge per pair
  std::vector<int> other_bridge_counts;
  std::vector<int> a_values;
  bool cor_2_2 = false;
  bool thm_2_1 = false;
  bool cor_2_4 = false;
  bool thm_2_3 = false;
  std::optional<bool> zero_walk_independence;
};

CriteriaReport evaluate_selection(const SelectionContext& ctx,
                                  const BridgeSelection& sel);

enum class Criterion { Cor22, Thm21, Cor24, Thm23 };

struct SearchOutcome {
  enum class Status { Found, ExhaustedNone, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  std::optional<BridgeSelection> selection;
  long long nodes = 0;
};

/// Backtracking over bridge choices, fail-first pair order, shared-edge
/// preference, monotone pruning. Definitive ExhaustedNone only after the
/// whole space is covered within budget.
SearchOutcome search_selection(const SelectionContext& ctx, Criterion crit,
                               long long budget = 100'000'000);

/// Stream selections in lexicographic choice order until the callback
/// returns false or cap selections were visited. Returns the number seen.
long long for_each_selection(
    const SelectionContext& ctx, long long cap,
    const std::function<bool(const BridgeSelection&)>& fn);

const char* criterion_name(Criterion c);

}  // namespace edgepoly

#endif  // EDGEPOLY_CRITERIA_HPP
