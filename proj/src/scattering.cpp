#include "cliquemine/scattering.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cliquemine/kernels.hpp"

namespace cliquemine {

namespace {

void check_dims(const Graph& g, std::size_t x, std::size_t out) {
  const auto n = static_cast<std::size_t>(g.node_count());
  if (x != n || out != n) throw std::invalid_argument("vector length does not match node count");
}

// x scaled by 1/deg (0 where deg = 0), then gathered over adjacency
void walk_step(const Graph& g, const double* x, double* scratch, double* out, std::size_t n) {
  const auto& k = kernels::ops();
  for (std::size_t i = 0; i < n; ++i) {
    auto d = g.degree(static_cast<std::int32_t>(i));
    scratch[i] = d > 0 ? x[i] / static_cast<double>(d) : 0.0;
  }
  k.csr_gather_sum(g.csr_offsets().data(), g.csr_neighbors().data(), scratch, out, n);
  k.halfsum(x, out, out, n);
}

}  // namespace

void lazy_walk_apply(const Graph& g, std::span<const double> x, std::span<double> out,
                     ApplyStats* stats) {
  check_dims(g, x.size(), out.size());
  std::vector<double> scratch(x.size());
  walk_step(g, x.data(), scratch.data(), out.data(), x.size());
  if (stats) ++stats->lazy_walk_applications;
}

namespace {

// out = P^t x (t >= 1) using two buffers
void walk_power(const Graph& g, int t, std::span<const double> x, std::span<double> out,
                ApplyStats* stats) {
  const std::size_t n = x.size();
  std::vector<double> scratch(n), cur(x.begin(), x.end()), next(n);
  for (int i = 0; i < t; ++i) {
    walk_step(g, cur.data(), scratch.data(), next.data(), n);
    if (stats) ++stats->lazy_walk_applications;
    cur.swap(next);
  }
  std::copy(cur.begin(), cur.end(), out.begin());
}

}  // namespace

void wavelet_apply(const Graph& g, int k, std::span<const double> x, std::span<double> out,
                   ApplyStats* stats) {
  if (k < 0) throw std::invalid_argument("wavelet order must be >= 0");
  check_dims(g, x.size(), out.size());
  const std::size_t n = x.size();
  if (k == 0) {
    lazy_walk_apply(g, x, out, stats);
    kernels::ops().sub(x.data(), out.data(), out.data(), n);
    return;
  }
  const int half = 1 << (k - 1);
  std::vector<double> mid(n);
  walk_power(g, half, x, mid, stats);           // P^{2^{k-1}} x
  walk_power(g, half, mid, out, stats);         // P^{2^k} x, reusing the intermediate
  kernels::ops().sub(mid.data(), out.data(), out.data(), n);
}

void lowpass_apply(const Graph& g, int r, std::span<const double> x, std::span<double> out,
                   ApplyStats* stats) {
  if (r < 1) throw std::invalid_argument("low-pass power must be >= 1");
  check_dims(g, x.size(), out.size());
  const std::size_t n = x.size();
  const auto& k = kernels::ops();

  std::vector<double> inv_sqrt(n);
  for (std::size_t i = 0; i < n; ++i)
    inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(static_cast<std::int32_t>(i))) + 1.0);

  std::vector<double> cur(x.begin(), x.end()), scaled(n), gathered(n);
  for (int step = 0; step < r; ++step) {
    k.mul(cur.data(), inv_sqrt.data(), scaled.data(), n);
    k.csr_gather_sum(g.csr_offsets().data(), g.csr_neighbors().data(), scaled.data(),
                     gathered.data(), n);
    k.add(gathered.data(), scaled.data(), gathered.data(), n);  // (W + I) s
    k.mul(gathered.data(), inv_sqrt.data(), cur.data(), n);
  }
  std::copy(cur.begin(), cur.end(), out.begin());
  (void)stats;
}

namespace {

template <typename Fn>
std::vector<std::vector<double>> per_column(const Graph& g,
                                            const std::vector<std::vector<double>>& cols, Fn fn) {
  std::vector<std::vector<double>> out;
  out.reserve(cols.size());
  for (const auto& col : cols) {
    std::vector<double> y(col.size());
    fn(g, col, y);
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> lazy_walk_apply(const Graph& g,
                                                 const std::vector<std::vector<double>>& cols,
                                                 ApplyStats* stats) {
  return per_column(g, cols, [&](const Graph& gg, std::span<const double> x, std::span<double> y) {
    lazy_walk_apply(gg, x, y, stats);
  });
}

std::vector<std::vector<double>> wavelet_apply(const Graph& g, int k,
                                               const std::vector<std::vector<double>>& cols,
                                               ApplyStats* stats) {
  return per_column(g, cols, [&](const Graph& gg, std::span<const double> x, std::span<double> y) {
    wavelet_apply(gg, k, x, y, stats);
  });
}

std::vector<std::vector<double>> lowpass_apply(const Graph& g, int r,
                                               const std::vector<std::vector<double>>& cols,
                                               ApplyStats* stats) {
  return per_column(g, cols, [&](const Graph& gg, std::span<const double> x, std::span<double> y) {
    lowpass_apply(gg, r, x, y, stats);
  });
}

FeatureMatrix scattering_augment(const Graph& g, const FeatureMatrix& fm, int k_max, int r_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
  FeatureMatrix out;
  out.node_count = fm.node_count;
  for (const auto& [name, col] : fm.columns) out.add_column(name, col);

  const std::size_t n = fm.node_count;
  std::vector<double> y(n);
  for (const auto& [name, col] : fm.columns) {
    for (int k = 0; k <= k_max; ++k) {
      wavelet_apply(g, k, col, y);
      kernels::ops().abs(y.data(), y.data(), n);
      out.add_column(name + "@Psi" + std::to_string(k), y);
    }
    for (int r = 1; r <= r_max; ++r) {
      lowpass_apply(g, r, col, y);
      out.add_column(name + "@A" + std::to_string(r), y);
    }
  }
  return out;
}

void DiffusionOperator::apply(const Graph& g, std::span<const double> x,
                              std::span<double> out) const {
  switch (kind) {
    case DiffusionKind::LazyWalk: lazy_walk_apply(g, x, out); return;
    case DiffusionKind::Wavelet: wavelet_apply(g, scale, x, out); return;
    case DiffusionKind::LowPass: lowpass_apply(g, scale, x, out); return;
  }
  throw std::invalid_argument("bad operator kind");
}

std::vector<double> DiffusionOperator::dense(const Graph& g, std::int32_t dense_limit) const {
  const std::int32_t n = g.node_count();
  if (n > dense_limit)
    throw std::invalid_argument("dense materialization refused: " + std::to_string(n) +
                                " nodes exceeds limit " + std::to_string(dense_limit));
  std::vector<double> mat(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> e(n, 0.0), col(n);
  for (std::int32_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    apply(g, e, col);
    for (std::int32_t i = 0; i < n; ++i) mat[static_cast<std::size_t>(i) * n + j] = col[i];
    e[j] = 0.0;
  }
  return mat;
}

}  // namespace cliquemine
