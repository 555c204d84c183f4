#ifndef EDGEPOLY_REPORT_HPP
#define EDGEPOLY_REPORT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "edgepoly/criteria.hpp"
#include "edgepoly/cycles.hpp"
#include "edgepoly/decide.hpp"

namespace edgepoly {

struct GraphSummary {
  int d = 0;
  int n = 0;
  std::vector<std::array<int, 2>> edges;  // by edge index, vertex pairs

  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

struct ClassificationSummary {
  std::string kind;  // "not-FHM" | "FHM-no-pair" | "fundamental-FHM"
  // Witness pair of a failed bridge condition, as vertex sequences.
  std::optional<std::array<std::vector<int>, 2>> bridgeless_pair;

  friend bool operator==(const ClassificationSummary&,
                         const ClassificationSummary&) = default;
};

struct PairSummary {
  std::vector<int> first;
  std::vector<int> second;
  int bridges = 0;
  int chords = 0;

  friend bool operator==(const PairSummary&, const PairSummary&) = default;
};

struct CriterionEntry {
  std::string name;    // cor_2_2 | thm_2_1 | cor_2_4 | thm_2_3
  std::string status;  // holds | fails-exhaustively | inconclusive
  long long nodes = 0;
  // Witness selection when holding: chosen bridge per pair, vertex pairs.
  std::optional<std::vector<std::array<int, 2>>> selection;
  std::optional<std::vector<int>> counts;
  std::optional<std::vector<int>> a_values;
  std::optional<bool> zero_walk_independence;

  friend bool operator==(const CriterionEntry&, const CriterionEntry&) =
      default;
};

struct ConnectorSummary {
  std::string kind;  // bridge | chord-first | chord-second
  std::array<int, 2> edge{};

  friend bool operator==(const ConnectorSummary&, const ConnectorSummary&) =
      default;
};

struct WDecisionSummary {
  std::string status;  // nonempty | empty | inconclusive | not-run
  std::optional<std::vector<ConnectorSummary>> selection;

  friend bool operator==(const WDecisionSummary&, const WDecisionSummary&) =
      default;
};

/// Witness as an integer vector keyed by edge pairs (gcd-normalized);
/// margins are those of the normalized vector, re-verified at build time.
struct WitnessSummary {
  std::vector<std::array<int, 2>> edges;
  std::vector<std::string> coeffs;
  std::vector<std::string> margins;

  friend bool operator==(const WitnessSummary&, const WitnessSummary&) =
      default;
};

struct Budgets {
  long long cycles = 0;
  long long criteria_nodes = 0;
  long long w_nodes = 0;
  long long lp_calls = 0;
  long long elapsed_ms = 0;

  friend bool operator==(const Budgets&, const Budgets&) = default;
};

struct AnalysisReport {
  GraphSummary graph;
  ClassificationSummary classification;
  std::vector<PairSummary> pairs;
  std::vector<CriterionEntry> criteria;
  WDecisionSummary w_decision;
  std::optional<WitnessSummary> witness;
  // exists | does-not-exist | exists-trivially | not-FHM | unknown
  std::string verdict;
  Budgets budgets;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) =
      default;
};

struct AnalyzeOptions {
  EnumerationOptions enumeration;
  long long search_budget = 100'000'000;
  bool run_all_criteria = false;
  std::optional<Criterion> only_criterion;
  bool all_orientations = false;
};

/// Classification and pair census only; no criteria, no LP.
AnalysisReport cmd_classify(const Graph& g, const AnalyzeOptions& opts = {});

/// Criteria searches in hierarchy order (Cor 2.2, Thm 2.1, Cor 2.4,
/// Thm 2.3), stopping at the first pass unless run_all_criteria.
AnalysisReport cmd_criteria(const Graph& g, const AnalyzeOptions& opts = {});

/// Full pipeline: classify, criteria, then the exact W decision if no
/// criterion settled existence.
AnalysisReport cmd_decide(const Graph& g, const AnalyzeOptions& opts = {});

std::string to_json_string(const AnalysisReport& report, int indent = 2);
AnalysisReport report_from_json(const std::string& text);
std::string render_text(const AnalysisReport& report);

/// 0 = exists / exists-trivially, 1 = does-not-exist / not-FHM,
/// 2 = unknown or inconclusive.
int exit_code(const AnalysisReport& report);

}  // namespace edgepoly

#endif  // EDGEPOLY_REPORT_HPP
