#include "cliquemine/scorer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cliquemine/kernels.hpp"

namespace cliquemine {

std::string_view scorer_init_name(ScorerInit init) {
  switch (init) {
    case ScorerInit::DegreeProportional: return "degree";
    case ScorerInit::Uniform: return "uniform";
    case ScorerInit::FeatureLinear: return "feature-linear";
  }
  throw std::invalid_argument("bad init");
}

ScorerInit scorer_init_from_name(std::string_view name) {
  if (name == "degree") return ScorerInit::DegreeProportional;
  if (name == "uniform") return ScorerInit::Uniform;
  if (name == "feature-linear") return ScorerInit::FeatureLinear;
  throw std::invalid_argument("unknown init '" + std::string(name) +
                              "' (expected degree|uniform|feature-linear)");
}

void ScorerConfig::validate() const {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (step_size && !(*step_size > 0.0)) throw std::invalid_argument("step_size must be > 0");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
}

namespace {

void check_probability_input(const Graph& g, std::span<const double> p) {
  if (p.size() != static_cast<std::size_t>(g.node_count()))
    throw std::invalid_argument("probability vector length does not match node count");
  for (double v : p)
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("probability entries must lie in [0,1]");
}

}  // namespace

LossBreakdown mcp_loss(const Graph& g, std::span<const double> p, double beta) {
  check_probability_input(g, p);
  const auto& k = kernels::ops();
  const std::size_t n = p.size();
  std::vector<double> wp(n);
  k.csr_gather_sum(g.csr_offsets().data(), g.csr_neighbors().data(), p.data(), wp.data(), n);
  const double pwp = k.dot(p.data(), wp.data(), n);
  const double s = k.sum(p.data(), n);
  const double q = k.dot(p.data(), p.data(), n);
  LossBreakdown out;
  out.l1 = -pwp;
  out.l2 = s * s - q - pwp;
  out.total = out.l1 + beta * out.l2;
  return out;
}

std::vector<double> mcp_loss_gradient(const Graph& g, std::span<const double> p, double beta) {
  check_probability_input(g, p);
  const auto& k = kernels::ops();
  const std::size_t n = p.size();
  std::vector<double> wp(n), grad(n);
  k.csr_gather_sum(g.csr_offsets().data(), g.csr_neighbors().data(), p.data(), wp.data(), n);
  const double s = k.sum(p.data(), n);
  k.grad_combine(p.data(), wp.data(), s, beta, grad.data(), n);
  return grad;
}

ProbabilityVector minmax_scale(std::span<const double> h) {
  if (h.empty()) throw std::invalid_argument("empty score vector");
  const auto& k = kernels::ops();
  double lo, hi;
  k.minmax(h.data(), h.size(), &lo, &hi);
  ProbabilityVector out;
  out.p.resize(h.size());
  if (lo == hi) {
    out.degenerate = true;
    std::fill(out.p.begin(), out.p.end(), 0.5);
    return out;
  }
  const double inv = 1.0 / (hi - lo);
  k.affine(h.data(), inv, -lo * inv, out.p.data(), h.size());
  return out;
}

double default_step_size(const Graph& g, double beta) {
  return 1.0 / (2.0 * (static_cast<double>(g.max_degree()) +
                       beta * static_cast<double>(g.node_count())));
}

ProbabilityVector optimize_probabilities(const Graph& g, const FeatureMatrix& features,
                                         const ScorerConfig& cfg,
                                         std::vector<double>* loss_trace) {
  cfg.validate();
  const std::int32_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");
  const std::size_t sz = static_cast<std::size_t>(n);

  std::vector<double> p(sz, 0.0);
  switch (cfg.init) {
    case ScorerInit::DegreeProportional: {
      const double dmax = g.max_degree();
      if (dmax > 0)
        for (std::int32_t i = 0; i < n; ++i) p[i] = static_cast<double>(g.degree(i)) / dmax;
      break;
    }
    case ScorerInit::Uniform:
      std::fill(p.begin(), p.end(), 0.5);
      break;
    case ScorerInit::FeatureLinear: {
      if (features.columns.empty())
        throw std::invalid_argument("feature-linear init needs a feature matrix");
      if (features.node_count != sz)
        throw std::invalid_argument("feature matrix does not match graph");
      // row mean of column-wise min-max scaled features
      std::vector<double> acc(sz, 0.0);
      for (const auto& [name, col] : features.columns) {
        auto scaled = minmax_scale(col);
        for (std::size_t i = 0; i < sz; ++i) acc[i] += scaled.p[i];
      }
      for (std::size_t i = 0; i < sz; ++i) p[i] = acc[i] / features.columns.size();
      break;
    }
  }

  const double step = cfg.step_size.value_or(default_step_size(g, cfg.beta));
  const auto& k = kernels::ops();
  std::vector<double> wp(sz), grad(sz);

  if (loss_trace) {
    loss_trace->clear();
    loss_trace->push_back(mcp_loss(g, p, cfg.beta).total);
  }
  for (int it = 0; it < cfg.iterations; ++it) {
    k.csr_gather_sum(g.csr_offsets().data(), g.csr_neighbors().data(), p.data(), wp.data(), sz);
    const double s = k.sum(p.data(), sz);
    k.grad_combine(p.data(), wp.data(), s, cfg.beta, grad.data(), sz);
    k.step_clip01(p.data(), grad.data(), step, sz);
    if (loss_trace) loss_trace->push_back(mcp_loss(g, p, cfg.beta).total);
  }
  return minmax_scale(p);
}

}  // namespace cliquemine
