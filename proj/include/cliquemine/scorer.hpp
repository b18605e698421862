#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cliquemine/features.hpp"
#include "cliquemine/graph.hpp"

namespace cliquemine {

enum class ScorerInit { DegreeProportional, Uniform, FeatureLinear };

std::string_view scorer_init_name(ScorerInit init);
ScorerInit scorer_init_from_name(std::string_view name);

struct ScorerConfig {
  double beta = 0.06;
  std::optional<double> step_size;  // empty selects 1 / (2 (d_max + beta n))
  int iterations = 500;
  std::uint64_t seed = 0;  // recorded in manifests; the optimizer itself is deterministic
  ScorerInit init = ScorerInit::DegreeProportional;

  void validate() const;
};

struct LossBreakdown {
  double total = 0.0;
  double l1 = 0.0;  // -p^T W p
  double l2 = 0.0;  // p^T Wbar p, complement without self-loops
};

// Evaluates the clique objective matrix-free: the complement term uses
// p^T Wbar p = (sum p)^2 - sum p^2 - p^T W p. Entries must lie in [0,1].
LossBreakdown mcp_loss(const Graph& g, std::span<const double> p, double beta);

// grad = -2 W p + 2 beta ((sum p) 1 - p - W p)
std::vector<double> mcp_loss_gradient(const Graph& g, std::span<const double> p, double beta);

struct ProbabilityVector {
  std::vector<double> p;
  bool degenerate = false;  // constant pre-scaling scores; every entry set to 0.5
};

// (h - min) / (max - min); constant input yields all 0.5 with the flag set.
ProbabilityVector minmax_scale(std::span<const double> h);

double default_step_size(const Graph& g, double beta);

// Projected gradient descent on the clique objective from a deterministic
// start, clipped to [0,1] each step, then min-max scaled. Optionally records
// the loss after each iteration (index 0 = initial point).
ProbabilityVector optimize_probabilities(const Graph& g, const FeatureMatrix& features,
                                         const ScorerConfig& cfg,
                                         std::vector<double>* loss_trace = nullptr);

}  // namespace cliquemine
