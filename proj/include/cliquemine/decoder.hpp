#pragma once

#include <span>

#include "cliquemine/graph.hpp"
#include "cliquemine/scorer.hpp"

namespace cliquemine {

struct DecoderConfig {
  int num_starts = 20;  // distinct seeds taken from the probability-sorted order
};

// Greedy clique construction: order nodes by descending probability (ties by
// ascending id); for each of the first num_starts positions, seed a clique
// there and sweep the rest of the order once, admitting nodes adjacent to
// every current member. Largest clique wins; first found wins ties.
CliqueResult decode_clique(const Graph& g, std::span<const double> p, const DecoderConfig& cfg);

inline CliqueResult decode_clique(const Graph& g, const ProbabilityVector& p,
                                  const DecoderConfig& cfg) {
  return decode_clique(g, std::span<const double>(p.p), cfg);
}

}  // namespace cliquemine
