#include "cliquemine/decoder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cliquemine {

CliqueResult decode_clique(const Graph& g, std::span<const double> p, const DecoderConfig& cfg) {
  const std::int32_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (p.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("probability vector length does not match node count");
  if (cfg.num_starts < 1) throw std::invalid_argument("num_starts must be >= 1");

  std::vector<std::int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    if (p[a] != p[b]) return p[a] > p[b];
    return a < b;
  });

  const int starts = std::min<std::int64_t>(cfg.num_starts, n);
  std::vector<std::int32_t> best;
  std::vector<std::int32_t> member_adjacency(n);  // count of clique members adjacent to each node

  for (int s = 0; s < starts; ++s) {
    std::fill(member_adjacency.begin(), member_adjacency.end(), 0);
    const std::int32_t seed = order[s];
    std::vector<std::int32_t> clique{seed};
    for (std::int32_t v : g.neighbors(seed)) ++member_adjacency[v];
    for (std::int32_t v : order) {
      if (v == seed) continue;
      if (member_adjacency[v] == static_cast<std::int32_t>(clique.size())) {
        clique.push_back(v);
        for (std::int32_t w : g.neighbors(v)) ++member_adjacency[w];
      }
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }

  std::sort(best.begin(), best.end());
  return CliqueResult{std::move(best)};
}

}  // namespace cliquemine
