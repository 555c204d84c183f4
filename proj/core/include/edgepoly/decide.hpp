#ifndef EDGEPOLY_DECIDE_HPP
#define EDGEPOLY_DECIDE_HPP

#include <optional>
#include <vector>

#include "edgepoly/cones.hpp"
#include "edgepoly/criteria.hpp"

namespace edgepoly {

/// Cone of one chosen bridge per pair: rows are the walks' inequality
/// vectors, provenance the bridge connectors.
OpenCone cone_of_bridge_selection(const SelectionContext& ctx,
                                  const BridgeSelection& sel);

/// Cone of an arbitrary connector selection (bridges and chords).
OpenCone cone_of_connectors(const Graph& g, const std::vector<OddCycle>& cycles,
                            const std::vector<DisjointPair>& pairs,
                            const std::vector<Connector>& selection,
                            bool all_orientations = false);

struct DecideOptions {
  long long budget = 100'000'000;  // backtracking/LP node budget
  bool all_orientations = false;   // one row per walk representative
  bool criteria_guidance = true;   // try criteria-suggested selections first
};

struct WDecision {
  enum class Status { Nonempty, Empty, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  std::vector<Connector> selection;  // when Nonempty
  std::optional<Witness> witness;    // when Nonempty
  long long nodes = 0;
  long long lp_calls = 0;
};

/// The exact W != 0 decision of the distributive rewrite: some selection of
/// one connector per pair (bridges and chords both admissible) has a
/// nonempty open cone, or none does after exhausting every selection.
/// Requires a fundamental FHM classification.
WDecision decide_W(const Graph& g, const Classification& cls,
                   const DecideOptions& opts = {});

/// Escape hatch for three or more zero walks: with a_i = 0 exactly at
/// zero_pairs (r >= 3) and positive elsewhere, the full cone is nonempty
/// iff the zero-walk rows generate a pointed cone inside the hyperplane
/// {x : w.x = 0}. Throws BadZeroSet when the preconditions fail.
bool remark_2_5_restricted_check(const SelectionContext& ctx,
                                 const BridgeSelection& sel,
                                 const std::vector<int>& zero_pairs,
                                 const WeightVector& w);

}  // namespace edgepoly

#endif  // EDGEPOLY_DECIDE_HPP
