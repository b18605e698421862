#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemine/features.hpp"
#include "cliquemine/fpgrowth.hpp"
#include "cliquemine/graph.hpp"
#include "cliquemine/scorer.hpp"

namespace cliquemine {

inline constexpr std::string_view kTopConsequent = "MC_Prob_Top_20P";
inline constexpr std::string_view kBottomConsequent = "MC_Prob_Bottom_20P";

enum class SortMetric { Support, Confidence, Lift };

std::string_view sort_metric_name(SortMetric m);
SortMetric sort_metric_from_name(std::string_view name);

struct ExplainerConfig {
  double min_support = 0.05;
  double min_confidence = 0.1;
  double epsilon = 0.01;  // interval-overlap tolerance for rule selection
  SortMetric sort_metric = SortMetric::Support;
  std::vector<std::string> targets{std::string(kTopConsequent), std::string(kBottomConsequent)};
  bool per_graph = false;  // mine each graph separately instead of pooling

  void validate() const;
};

// One transaction per node whose probability bin is extreme: its feature-bin
// items ("<feature> in [lo%, hi%]") plus exactly one consequent item. Nodes in
// middle bins contribute nothing.
TransactionDB build_transactions(const PercentileBins& bins, std::span<const Quintile> prob_bins,
                                 ItemCatalog& catalog);

struct AntecedentInterval {
  std::string feature;
  double lo = 0.0;  // percent
  double hi = 0.0;
};
using ParsedAntecedent = std::vector<AntecedentInterval>;

// Parses "<feature> in [lo%, hi%]" items joined by " AND ". Whitespace-only
// input gives an empty list; malformed items throw naming the fragment.
ParsedAntecedent parse_antecedents(std::string_view text);

// True iff for every feature present in both lists the intervals overlap by
// at most epsilon percent. Features on one side only impose no constraint.
bool is_disjoint(const ParsedAntecedent& a, const ParsedAntecedent& b, double epsilon);

// Filters rules whose consequent equals target, sorts descending by the
// configured metric (ties by antecedent text, then input order), then keeps
// each rule iff its antecedent is disjoint from every kept rule's.
std::vector<AssociationRule> greedy_select_for_target(std::span<const AssociationRule> rules,
                                                      std::string_view target,
                                                      const ExplainerConfig& cfg,
                                                      const ItemCatalog& catalog);

// Concatenation of per-target selections in cfg.targets order.
std::vector<AssociationRule> greedy_select(std::span<const AssociationRule> rules,
                                           const ExplainerConfig& cfg, const ItemCatalog& catalog);

struct RuleRow {
  std::string antecedents;
  std::string consequents;
  double support = 0.0;
  double confidence = 0.0;
  double lift = 0.0;
};

struct TargetSelection {
  std::string target;
  std::vector<RuleRow> rules;  // selection order
};

struct ExplanationRun {
  std::string scope;  // "pooled" or the source graph label
  std::size_t transaction_count = 0;
  std::size_t frequent_itemset_count = 0;
  std::size_t generated_rule_count = 0;  // rules before selection
  std::size_t selected_rule_count = 0;
  std::vector<TargetSelection> selections;
};

struct ExplanationReport {
  std::vector<std::string> feature_names;
  ScorerConfig scorer;
  ExplainerConfig config;
  std::vector<ExplanationRun> runs;
};

// Full pipeline: per graph compute features, score, bin per graph instance,
// build transactions; pool across graphs (or mine per graph); generate rules
// per target and greedily select. Deterministic for fixed inputs and configs,
// independent of jobs.
ExplanationReport explain(std::span<const Graph> graphs, std::span<const FeatureName> features,
                          const ScorerConfig& scorer_cfg, const ExplainerConfig& cfg,
                          std::span<const std::string> graph_labels = {}, int jobs = 1);

// CSV: Dataset,Features,Antecedents,Consequents,Support,Confidence,Lift
void write_report_csv(const ExplanationReport& report, std::string_view dataset,
                      std::string_view features_label, std::ostream& out);

// Pretty-printed JSON document (byte-stable for identical reports).
std::string report_to_json_string(const ExplanationReport& report, std::string_view dataset,
                                  std::string_view features_label);

}  // namespace cliquemine
