#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquemine {

// Immutable undirected simple graph in CSR form; neighbor lists sorted.
// Safe to share across threads once constructed.
class Graph {
 public:
  Graph() = default;

  // Builds from 0-based endpoint pairs. Duplicate and reversed pairs collapse
  // into one undirected edge. Throws on self-loops or out-of-range endpoints.
  static Graph from_edges(std::int32_t node_count,
                          std::span<const std::pair<std::int32_t, std::int32_t>> edges);

  std::int32_t node_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  std::int32_t degree(std::int32_t u) const { return offsets_[u + 1] - offsets_[u]; }
  std::int32_t max_degree() const;
  std::span<const std::int32_t> neighbors(std::int32_t u) const {
    return {adj_.data() + offsets_[u], static_cast<std::size_t>(offsets_[u + 1] - offsets_[u])};
  }
  bool has_edge(std::int32_t u, std::int32_t v) const;

  // Original labels for graphs whose ids were compacted at load; empty means
  // identity (node i was labeled i).
  const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
  std::int64_t original_id(std::int32_t u) const {
    return original_ids_.empty() ? u : original_ids_[u];
  }
  void set_original_ids(std::vector<std::int64_t> ids);

  const std::vector<std::int32_t>& csr_offsets() const { return offsets_; }
  const std::vector<std::int32_t>& csr_neighbors() const { return adj_; }

 private:
  std::int32_t n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int32_t> offsets_ = {0};
  std::vector<std::int32_t> adj_;
  std::vector<std::int64_t> original_ids_;
};

struct CliqueResult {
  std::vector<std::int32_t> nodes;  // sorted ascending
  int size() const { return static_cast<int>(nodes.size()); }
};

struct GraphStats {
  std::int32_t node_count = 0;
  std::int64_t edge_count = 0;
  double density = 0.0;  // 2m / n(n-1); 0 for n <= 1
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::int64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

struct LoadDiagnostics {
  std::int64_t duplicate_edges = 0;  // edge lines dropped as duplicate/reversed
  std::int64_t declared_edges = -1;  // DIMACS header count; -1 for edge lists
};

// DIMACS clique format: "c" comments, one "p edge <n> <m>" line, "e <u> <v>"
// lines with 1-based endpoints. The header edge count is advisory; the
// deduplicated count wins.
Graph load_dimacs_clq(std::istream& in, LoadDiagnostics* diag = nullptr);

// Whitespace-separated id pairs; arbitrary non-negative ids compacted to
// 0..n-1 in first-appearance order. '#' and '%' lines are skipped.
Graph load_edge_list(std::istream& in, LoadDiagnostics* diag = nullptr);

// Sniffs the format from the first meaningful line.
Graph load_graph_file(const std::string& path, LoadDiagnostics* diag = nullptr);

void export_dimacs_clq(const Graph& g, std::ostream& out);
void export_edge_list(const Graph& g, std::ostream& out);

GraphStats stats(const Graph& g);

// True iff every unordered pair is an edge; empty sets and singletons pass.
bool is_clique(const Graph& g, std::span<const std::int32_t> nodes);

// Exact maximum clique by branch and bound over ascending vertex order with a
// greedy coloring bound. Returns the lexicographically smallest maximum
// clique. Test oracle; refuses graphs larger than node_limit.
CliqueResult brute_force_max_clique(const Graph& g, int node_limit = 60);

struct PlantedClique {
  Graph graph;
  std::vector<std::int32_t> planted;  // sorted ascending
};

// G(n, edge_prob) with a clique forced on k seeded-random nodes. Identical
// (seed, params) give an identical graph.
PlantedClique planted_clique(std::int32_t n, double edge_prob, std::int32_t k, std::uint64_t seed);

}  // namespace cliquemine
