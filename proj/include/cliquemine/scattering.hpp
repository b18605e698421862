#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cliquemine/features.hpp"
#include "cliquemine/graph.hpp"

namespace cliquemine {

struct ApplyStats {
  std::int64_t lazy_walk_applications = 0;
};

// y = P x with P = (I + W D^-1)/2. Zero-degree nodes contribute nothing to
// W D^-1, so P acts on them as I/2. Matrix-free throughout.
void lazy_walk_apply(const Graph& g, std::span<const double> x, std::span<double> out,
                     ApplyStats* stats = nullptr);

// Diffusion wavelet: k = 0 gives (I - P) x, k >= 1 gives (P^{2^{k-1}} - P^{2^k}) x,
// reusing the half-scale intermediate (exactly 2^k walk applications).
void wavelet_apply(const Graph& g, int k, std::span<const double> x, std::span<double> out,
                   ApplyStats* stats = nullptr);

// y = A^r x with A = (D+I)^{-1/2} (W+I) (D+I)^{-1/2}, r >= 1.
void lowpass_apply(const Graph& g, int r, std::span<const double> x, std::span<double> out,
                   ApplyStats* stats = nullptr);

// Column-wise variants.
std::vector<std::vector<double>> lazy_walk_apply(const Graph& g,
                                                 const std::vector<std::vector<double>>& cols,
                                                 ApplyStats* stats = nullptr);
std::vector<std::vector<double>> wavelet_apply(const Graph& g, int k,
                                               const std::vector<std::vector<double>>& cols,
                                               ApplyStats* stats = nullptr);
std::vector<std::vector<double>> lowpass_apply(const Graph& g, int r,
                                               const std::vector<std::vector<double>>& cols,
                                               ApplyStats* stats = nullptr);

// Appends |Psi_k col| channels for k = 0..k_max and A^r col channels for
// r = 1..r_max to every input column, labeled "<name>@Psi<k>" / "<name>@A<r>".
FeatureMatrix scattering_augment(const Graph& g, const FeatureMatrix& fm, int k_max, int r_max);

enum class DiffusionKind { LazyWalk, Wavelet, LowPass };

struct DiffusionOperator {
  DiffusionKind kind = DiffusionKind::LazyWalk;
  int scale = 0;  // wavelet order k, or low-pass power r (>= 1)

  void apply(const Graph& g, std::span<const double> x, std::span<double> out) const;

  // Row-major n*n materialization for cross-checks only; refuses graphs
  // larger than dense_limit.
  std::vector<double> dense(const Graph& g, std::int32_t dense_limit = 2000) const;
};

}  // namespace cliquemine
