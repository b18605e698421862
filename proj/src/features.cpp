#include "cliquemine/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "cliquemine/kernels.hpp"

namespace cliquemine {

namespace {

struct FeatureInfo {
  FeatureName name;
  std::string_view display;
};

constexpr FeatureInfo kFeatures[kFeatureCount] = {
    {FeatureName::LogDegree, "Log Degree"},
    {FeatureName::LogTriangles, "Log Number of Triangles"},
    {FeatureName::ClusteringCoeff, "Clustering Coefficient"},
    {FeatureName::Eccentricity, "Eccentricity"},
    {FeatureName::BetweennessCentrality, "Betweenness Centrality"},
    {FeatureName::ClosenessCentrality, "Closeness Centrality"},
    {FeatureName::DegreeCentrality, "Degree Centrality"},
    {FeatureName::EigenvectorCentrality, "Eigenvector Centrality"},
    {FeatureName::LogMedianNeighborDegree, "Log Median Neighbor Degree"},
    {FeatureName::LogStdNeighborDegree, "Log Std Neighbor Degree"},
};

}  // namespace

std::string_view feature_display_name(FeatureName f) {
  for (const auto& info : kFeatures)
    if (info.name == f) return info.display;
  throw std::invalid_argument("unknown feature");
}

std::optional<FeatureName> feature_from_display_name(std::string_view name) {
  for (const auto& info : kFeatures)
    if (info.display == name) return info.name;
  return std::nullopt;
}

const std::vector<double>* FeatureMatrix::find(std::string_view name) const {
  for (const auto& [n, v] : columns)
    if (n == name) return &v;
  return nullptr;
}

void FeatureMatrix::add_column(std::string name, std::vector<double> values) {
  if (find(name)) throw std::invalid_argument("duplicate feature column: " + name);
  if (columns.empty() && node_count == 0) node_count = values.size();
  if (values.size() != node_count)
    throw std::invalid_argument("column length mismatch for " + name);
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in " + name);
  columns.emplace_back(std::move(name), std::move(values));
}

std::vector<std::int64_t> triangle_counts(const Graph& g) {
  const std::int32_t n = g.node_count();
  std::vector<std::int64_t> t(n, 0);
  // edge iterator: intersect neighbor lists, keep w > v so each triangle
  // (u < v < w) is found exactly once
  for (std::int32_t u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    for (std::int32_t v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto it1 = std::lower_bound(nu.begin(), nu.end(), v + 1);
      auto it2 = std::lower_bound(nv.begin(), nv.end(), v + 1);
      while (it1 != nu.end() && it2 != nv.end()) {
        if (*it1 < *it2) {
          ++it1;
        } else if (*it2 < *it1) {
          ++it2;
        } else {
          ++t[u];
          ++t[v];
          ++t[*it1];
          ++it1;
          ++it2;
        }
      }
    }
  }
  return t;
}

std::vector<double> log_degree(const Graph& g) {
  std::vector<double> out(g.node_count());
  for (std::int32_t i = 0; i < g.node_count(); ++i)
    out[i] = std::log(static_cast<double>(g.degree(i)) + 1.0);
  return out;
}

std::vector<double> log_triangles(const Graph& g) {
  auto t = triangle_counts(g);
  std::vector<double> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = std::log(static_cast<double>(t[i]) + 1.0);
  return out;
}

std::vector<double> clustering_coefficient(const Graph& g) {
  auto t = triangle_counts(g);
  std::vector<double> out(t.size(), 0.0);
  for (std::int32_t i = 0; i < g.node_count(); ++i) {
    double d = g.degree(i);
    if (d >= 2.0) out[i] = 2.0 * static_cast<double>(t[i]) / (d * (d - 1.0));
  }
  return out;
}

namespace {

// BFS from src; returns number reached (excluding src) and fills dist (-1
// for unreachable)
std::int32_t bfs(const Graph& g, std::int32_t src, std::vector<std::int32_t>& dist,
                 std::deque<std::int32_t>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[src] = 0;
  queue.clear();
  queue.push_back(src);
  std::int32_t reached = 0;
  while (!queue.empty()) {
    std::int32_t u = queue.front();
    queue.pop_front();
    for (std::int32_t v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached;
}

}  // namespace

std::vector<double> eccentricity(const Graph& g) {
  const std::int32_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  std::vector<std::int32_t> dist(n);
  std::deque<std::int32_t> queue;
  for (std::int32_t s = 0; s < n; ++s) {
    bfs(g, s, dist, queue);
    std::int32_t ecc = 0;
    for (std::int32_t v = 0; v < n; ++v) ecc = std::max(ecc, dist[v]);  // -1 never wins
    out[s] = ecc;
  }
  return out;
}

std::vector<double> betweenness_centrality(const Graph& g) {
  const std::int32_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  if (n < 3) return bc;

  std::vector<std::int32_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<std::int32_t>> pred(n);
  std::vector<std::int32_t> order;  // visit order; processed in reverse
  order.reserve(n);
  std::deque<std::int32_t> queue;

  for (std::int32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : pred) p.clear();
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      std::int32_t u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (std::int32_t v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          pred[v].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::int32_t w = *it;
      for (std::int32_t u : pred[w]) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  // the source loop counts ordered pairs; 1/((n-1)(n-2)) yields the
  // 2/((n-1)(n-2))-normalized unordered convention
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& v : bc) v *= scale;
  return bc;
}

std::vector<double> closeness_centrality(const Graph& g) {
  const std::int32_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  if (n <= 1) return out;
  std::vector<std::int32_t> dist(n);
  std::deque<std::int32_t> queue;
  for (std::int32_t s = 0; s < n; ++s) {
    std::int32_t reached = bfs(g, s, dist, queue);
    if (reached == 0) continue;
    std::int64_t total = 0;
    for (std::int32_t v = 0; v < n; ++v)
      if (dist[v] > 0) total += dist[v];
    double r = reached;
    out[s] = (r / static_cast<double>(n - 1)) * (r / static_cast<double>(total));
  }
  return out;
}

std::vector<double> degree_centrality(const Graph& g) {
  const std::int32_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  if (n <= 1) return out;
  for (std::int32_t i = 0; i < n; ++i)
    out[i] = static_cast<double>(g.degree(i)) / static_cast<double>(n - 1);
  return out;
}

EigenvectorCentralityResult eigenvector_centrality(const Graph& g, int max_iter, double tol) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const std::int32_t n = g.node_count();
  EigenvectorCentralityResult res;
  if (n == 0) return res;

  const auto& k = kernels::ops();
  const double uniform = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> x(n, uniform), y(n), diff(n);
  const std::size_t sz = static_cast<std::size_t>(n);

  for (int it = 1; it <= max_iter; ++it) {
    res.iterations = it;
    k.csr_gather_sum(g.csr_offsets().data(), g.csr_neighbors().data(), x.data(), y.data(), sz);
    double norm = std::sqrt(k.dot(y.data(), y.data(), sz));
    if (norm == 0.0) {
      res.zero_iterate = true;
      res.values.assign(sz, uniform);
      return res;
    }
    k.affine(y.data(), 1.0 / norm, 0.0, y.data(), sz);
    k.sub(y.data(), x.data(), diff.data(), sz);
    double change = std::sqrt(k.dot(diff.data(), diff.data(), sz));
    x.swap(y);
    if (change < tol) break;
  }
  res.values = std::move(x);
  return res;
}

NeighborDegreeStats neighbor_degree_stats(const Graph& g) {
  const std::int32_t n = g.node_count();
  NeighborDegreeStats res;
  res.log_median.assign(n, 0.0);
  res.log_std.assign(n, 0.0);
  std::vector<double> degs;
  for (std::int32_t u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    if (nb.empty()) continue;
    degs.clear();
    for (std::int32_t v : nb) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    double median = degs[(degs.size() - 1) / 2];  // lower median for even counts
    double mean = std::accumulate(degs.begin(), degs.end(), 0.0) / degs.size();
    double var = 0.0;
    for (double d : degs) var += (d - mean) * (d - mean);
    var /= degs.size();  // population variance
    res.log_median[u] = std::log(median + 1.0);
    res.log_std[u] = std::log(std::sqrt(var) + 1.0);
  }
  return res;
}

FeatureMatrix compute_features(const Graph& g, std::span<const FeatureName> names) {
  if (names.empty()) throw std::invalid_argument("empty feature list");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("duplicate feature: " +
                                    std::string(feature_display_name(names[i])));

  FeatureMatrix fm;
  fm.node_count = static_cast<std::size_t>(g.node_count());

  // shared intermediates
  std::optional<NeighborDegreeStats> nds;
  auto neighbor_stats = [&]() -> const NeighborDegreeStats& {
    if (!nds) nds = neighbor_degree_stats(g);
    return *nds;
  };

  for (FeatureName f : names) {
    std::vector<double> col;
    switch (f) {
      case FeatureName::LogDegree: col = log_degree(g); break;
      case FeatureName::LogTriangles: col = log_triangles(g); break;
      case FeatureName::ClusteringCoeff: col = clustering_coefficient(g); break;
      case FeatureName::Eccentricity: col = eccentricity(g); break;
      case FeatureName::BetweennessCentrality: col = betweenness_centrality(g); break;
      case FeatureName::ClosenessCentrality: col = closeness_centrality(g); break;
      case FeatureName::DegreeCentrality: col = degree_centrality(g); break;
      case FeatureName::EigenvectorCentrality: col = eigenvector_centrality(g).values; break;
      case FeatureName::LogMedianNeighborDegree: col = neighbor_stats().log_median; break;
      case FeatureName::LogStdNeighborDegree: col = neighbor_stats().log_std; break;
    }
    fm.add_column(std::string(feature_display_name(f)), std::move(col));
  }
  return fm;
}

std::vector<FeatureName> feature_set_preset(std::string_view name) {
  using F = FeatureName;
  if (name == "ten")
    return {F::LogDegree,       F::LogTriangles,          F::ClusteringCoeff,
            F::Eccentricity,    F::BetweennessCentrality, F::ClosenessCentrality,
            F::DegreeCentrality, F::EigenvectorCentrality, F::LogMedianNeighborDegree,
            F::LogStdNeighborDegree};
  if (name == "nine")
    return {F::LogDegree,       F::LogTriangles,          F::ClusteringCoeff,
            F::BetweennessCentrality, F::ClosenessCentrality, F::DegreeCentrality,
            F::EigenvectorCentrality, F::LogMedianNeighborDegree, F::LogStdNeighborDegree};
  if (name == "three") return {F::Eccentricity, F::ClusteringCoeff, F::LogDegree};
  if (name == "two") return {F::ClusteringCoeff, F::LogDegree};
  throw std::invalid_argument("unknown feature set '" + std::string(name) +
                              "' (expected two|three|nine|ten)");
}

std::string_view quintile_label(Quintile q) {
  switch (q) {
    case Quintile::Q0: return "[0%, 20%]";
    case Quintile::Q1: return "[20%, 40%]";
    case Quintile::Q2: return "[40%, 60%]";
    case Quintile::Q3: return "[60%, 80%]";
    case Quintile::Q4: return "[80%, 100%]";
  }
  throw std::invalid_argument("bad quintile");
}

std::vector<double> percentile_ranks(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("empty value vector");
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[idx[j]] == values[idx[i]]) ++j;
    // i values strictly less, j-i tied (self included)
    double r = 100.0 * (static_cast<double>(i) + 0.5 * static_cast<double>(j - i)) /
               static_cast<double>(n);
    for (std::size_t t = i; t < j; ++t) ranks[idx[t]] = r;
    i = j;
  }
  return ranks;
}

std::vector<Quintile> percentile_bin(std::span<const double> values) {
  auto ranks = percentile_ranks(values);
  std::vector<Quintile> bins(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    double r = ranks[i];
    int b = r < 20.0 ? 0 : r < 40.0 ? 1 : r < 60.0 ? 2 : r < 80.0 ? 3 : 4;
    bins[i] = static_cast<Quintile>(b);
  }
  return bins;
}

PercentileBins bin_features(const FeatureMatrix& fm) {
  PercentileBins out;
  out.node_count = fm.node_count;
  for (const auto& [name, col] : fm.columns) out.per_feature.emplace_back(name, percentile_bin(col));
  return out;
}

void write_feature_csv(const FeatureMatrix& fm, std::ostream& out,
                       const std::vector<std::int64_t>* original_ids) {
  out << "node_id";
  for (const auto& [name, col] : fm.columns) out << ',' << name;
  out << '\n';
  char buf[64];
  for (std::size_t i = 0; i < fm.node_count; ++i) {
    std::int64_t id = original_ids && !original_ids->empty()
                          ? (*original_ids)[i]
                          : static_cast<std::int64_t>(i);
    out << id;
    for (const auto& [name, col] : fm.columns) {
      std::snprintf(buf, sizeof(buf), "%.17g", col[i]);
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace cliquemine
