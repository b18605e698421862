#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquemine/graph.hpp"

namespace cliquemine {

enum class FeatureName {
  LogDegree,
  LogTriangles,
  ClusteringCoeff,
  Eccentricity,
  BetweennessCentrality,
  ClosenessCentrality,
  DegreeCentrality,
  EigenvectorCentrality,
  LogMedianNeighborDegree,
  LogStdNeighborDegree,
};

inline constexpr int kFeatureCount = 10;

// Human-readable labels ("Log Degree", ...) used in CSV headers and rule items.
std::string_view feature_display_name(FeatureName f);
std::optional<FeatureName> feature_from_display_name(std::string_view name);

// Column-labeled per-node features. All columns share node_count length and
// must be finite.
struct FeatureMatrix {
  std::size_t node_count = 0;
  std::vector<std::pair<std::string, std::vector<double>>> columns;

  const std::vector<double>* find(std::string_view name) const;
  void add_column(std::string name, std::vector<double> values);
};

std::vector<std::int64_t> triangle_counts(const Graph& g);

std::vector<double> log_degree(const Graph& g);                // ln(deg + 1)
std::vector<double> log_triangles(const Graph& g);             // ln(t + 1)
std::vector<double> clustering_coefficient(const Graph& g);    // 2t / d(d-1), 0 for d < 2
std::vector<double> eccentricity(const Graph& g);              // per-component BFS max distance
std::vector<double> betweenness_centrality(const Graph& g);    // Brandes, endpoint-excluding,
                                                               // scaled by 2/((n-1)(n-2))
std::vector<double> closeness_centrality(const Graph& g);      // component-size-scaled
std::vector<double> degree_centrality(const Graph& g);         // deg / (n-1)

struct EigenvectorCentralityResult {
  std::vector<double> values;  // L2-normalized, non-negative
  bool zero_iterate = false;   // hit the all-zero iterate; returned uniform
  int iterations = 0;
};
EigenvectorCentralityResult eigenvector_centrality(const Graph& g, int max_iter = 1000,
                                                   double tol = 1e-10);

struct NeighborDegreeStats {
  std::vector<double> log_median;  // ln(lower-median of neighbor degrees + 1)
  std::vector<double> log_std;     // ln(population std of neighbor degrees + 1)
};
NeighborDegreeStats neighbor_degree_stats(const Graph& g);

// Columns in requested order; throws on empty or duplicate names.
FeatureMatrix compute_features(const Graph& g, std::span<const FeatureName> names);

// Presets: ten (all), nine (ten minus eccentricity), three (eccentricity,
// clustering coefficient, log degree), two (three minus eccentricity).
std::vector<FeatureName> feature_set_preset(std::string_view name);

enum class Quintile : std::uint8_t { Q0 = 0, Q1, Q2, Q3, Q4 };

std::string_view quintile_label(Quintile q);  // "[0%, 20%]" ... "[80%, 100%]"

// Mean-rank percentile of each value: 100*(count_less + 0.5*count_equal)/n.
std::vector<double> percentile_ranks(std::span<const double> values);

// Five-way quintile of the mean-rank percentile; rank 100 maps to the top bin.
std::vector<Quintile> percentile_bin(std::span<const double> values);

struct PercentileBins {
  std::size_t node_count = 0;
  std::vector<std::pair<std::string, std::vector<Quintile>>> per_feature;
};

PercentileBins bin_features(const FeatureMatrix& fm);

// CSV with header "node_id,<names>"; values at 17 significant digits.
void write_feature_csv(const FeatureMatrix& fm, std::ostream& out,
                       const std::vector<std::int64_t>* original_ids = nullptr);

}  // namespace cliquemine
