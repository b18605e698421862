#include "cliquemine/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cliquemine/rng.hpp"

namespace cliquemine {

Graph Graph::from_edges(std::int32_t node_count,
                        std::span<const std::pair<std::int32_t, std::int32_t>> edges) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  std::vector<std::pair<std::int32_t, std::int32_t>> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.n_ = node_count;
  g.m_ = static_cast<std::int64_t>(norm.size());
  std::vector<std::int32_t> deg(node_count, 0);
  for (auto [u, v] : norm) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::int32_t i = 0; i < node_count; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adj_.resize(static_cast<std::size_t>(2) * norm.size());
  std::vector<std::int32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : norm) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  // insertion by sorted (u,v) already leaves each list sorted, but don't rely on it
  for (std::int32_t i = 0; i < node_count; ++i)
    std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);
  return g;
}

std::int32_t Graph::max_degree() const {
  std::int32_t d = 0;
  for (std::int32_t i = 0; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

bool Graph::has_edge(std::int32_t u, std::int32_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::set_original_ids(std::vector<std::int64_t> ids) {
  if (!ids.empty() && ids.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("id map size mismatch");
  original_ids_ = std::move(ids);
}

namespace {

bool parse_i64(std::string_view tok, std::int64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph load_dimacs_clq(std::istream& in, LoadDiagnostics* diag) {
  std::string line;
  std::int64_t lineno = 0;
  std::int64_t n = -1, m_declared = -1;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
      std::int64_t mv;
      if (!parse_i64(toks[2], n) || !parse_i64(toks[3], mv))
        throw ParseError(lineno, "non-integer token in problem line");
      if (n < 0 || mv < 0) throw ParseError(lineno, "negative count in problem line");
      m_declared = mv;
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError(lineno, "edge line before problem line");
      if (toks.size() != 3) throw ParseError(lineno, "edge line needs two endpoints");
      std::int64_t u, v;
      if (!parse_i64(toks[1], u) || !parse_i64(toks[2], v))
        throw ParseError(lineno, "non-integer token in edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "node index out of range [1, " + std::to_string(n) + "]");
      if (u == v) throw ParseError(lineno, "self-loop edge");
      edges.emplace_back(static_cast<std::int32_t>(u - 1), static_cast<std::int32_t>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unrecognized line type '" + std::string(toks[0]) + "'");
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");

  Graph g = Graph::from_edges(static_cast<std::int32_t>(n), edges);
  if (diag) {
    diag->declared_edges = m_declared;
    diag->duplicate_edges = static_cast<std::int64_t>(edges.size()) - g.edge_count();
  }
  return g;
}

Graph load_edge_list(std::istream& in, LoadDiagnostics* diag) {
  std::string line;
  std::int64_t lineno = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::vector<std::int64_t> ids;
  std::unordered_map<std::int64_t, std::int32_t> compact;

  auto intern = [&](std::int64_t raw) {
    auto [it, fresh] = compact.try_emplace(raw, static_cast<std::int32_t>(ids.size()));
    if (fresh) ids.push_back(raw);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#' || toks[0][0] == '%') continue;
    if (toks.size() % 2 != 0) throw ParseError(lineno, "odd token count");
    for (std::size_t i = 0; i < toks.size(); i += 2) {
      std::int64_t a, b;
      if (!parse_i64(toks[i], a) || !parse_i64(toks[i + 1], b))
        throw ParseError(lineno, "non-integer token");
      if (a < 0 || b < 0) throw ParseError(lineno, "negative node id");
      if (a == b) throw ParseError(lineno, "self-loop rejected");
      edges.emplace_back(intern(a), intern(b));
    }
  }

  Graph g = Graph::from_edges(static_cast<std::int32_t>(ids.size()), edges);
  g.set_original_ids(std::move(ids));
  if (diag) diag->duplicate_edges = static_cast<std::int64_t>(edges.size()) - g.edge_count();
  return g;
}

Graph load_graph_file(const std::string& path, LoadDiagnostics* diag) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  // sniff: DIMACS files open with 'c' or 'p' lines
  std::string first;
  while (std::getline(in, first)) {
    auto toks = split_ws(first);
    if (!toks.empty()) {
      in.seekg(0);
      if (toks[0] == "c" || toks[0] == "p") return load_dimacs_clq(in, diag);
      return load_edge_list(in, diag);
    }
  }
  throw std::runtime_error(path + ": empty file");
}

void export_dimacs_clq(const Graph& g, std::ostream& out) {
  out << "p edge " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (std::int32_t u = 0; u < g.node_count(); ++u)
    for (std::int32_t v : g.neighbors(u))
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void export_edge_list(const Graph& g, std::ostream& out) {
  for (std::int32_t u = 0; u < g.node_count(); ++u)
    for (std::int32_t v : g.neighbors(u))
      if (u < v) out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  if (g.node_count() > 1) {
    double n = static_cast<double>(g.node_count());
    s.density = 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
  }
  return s;
}

bool is_clique(const Graph& g, std::span<const std::int32_t> nodes) {
  for (std::int32_t u : nodes)
    if (u < 0 || u >= g.node_count()) throw std::out_of_range("node index out of range");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) continue;
      if (!g.has_edge(nodes[i], nodes[j])) return false;
    }
  return true;
}

namespace {

// dense adjacency rows as bit words, used only by the exact solver
struct BitAdj {
  std::int32_t n;
  std::int32_t words;
  std::vector<std::uint64_t> bits;

  explicit BitAdj(const Graph& g)
      : n(g.node_count()), words((n + 63) / 64), bits(static_cast<std::size_t>(n) * words, 0) {
    for (std::int32_t u = 0; u < n; ++u)
      for (std::int32_t v : g.neighbors(u)) row(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
  }
  std::uint64_t* row(std::int32_t u) { return bits.data() + static_cast<std::size_t>(u) * words; }
  const std::uint64_t* row(std::int32_t u) const {
    return bits.data() + static_cast<std::size_t>(u) * words;
  }
  bool adjacent(std::int32_t u, std::int32_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }
};

// greedy coloring upper bound on the clique size within cand
int color_bound(const BitAdj& adj, const std::vector<std::int32_t>& cand) {
  std::vector<std::vector<std::uint64_t>> classes;  // member masks per color class
  int colors = 0;
  for (std::int32_t v : cand) {
    bool placed = false;
    for (auto& cls : classes) {
      const std::uint64_t* r = adj.row(v);
      bool conflict = false;
      for (std::int32_t w = 0; w < adj.words; ++w)
        if (cls[w] & r[w]) {
          conflict = true;
          break;
        }
      if (!conflict) {
        cls[v >> 6] |= std::uint64_t(1) << (v & 63);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.emplace_back(adj.words, 0);
      classes.back()[v >> 6] |= std::uint64_t(1) << (v & 63);
      ++colors;
    }
  }
  return colors;
}

// Ascending-order DFS keeps clique enumeration in lexicographic order, so
// recording only strict improvements yields the lexicographically smallest
// maximum clique even under the pruning bounds.
void expand(const BitAdj& adj, std::vector<std::int32_t>& clique,
            const std::vector<std::int32_t>& cand, std::vector<std::int32_t>& best) {
  if (clique.size() + cand.size() <= best.size()) return;
  if (!cand.empty() &&
      clique.size() + static_cast<std::size_t>(color_bound(adj, cand)) <= best.size())
    return;
  std::vector<std::int32_t> next;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (clique.size() + (cand.size() - i) <= best.size()) return;
    std::int32_t v = cand[i];
    clique.push_back(v);
    if (clique.size() > best.size()) best = clique;
    next.clear();
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (adj.adjacent(v, cand[j])) next.push_back(cand[j]);
    expand(adj, clique, next, best);
    clique.pop_back();
  }
}

}  // namespace

CliqueResult brute_force_max_clique(const Graph& g, int node_limit) {
  if (g.node_count() > node_limit)
    throw std::invalid_argument("graph has " + std::to_string(g.node_count()) +
                                " nodes, exceeds oracle limit " + std::to_string(node_limit));
  CliqueResult result;
  if (g.node_count() == 0) return result;
  BitAdj adj(g);
  std::vector<std::int32_t> cand(g.node_count());
  for (std::int32_t i = 0; i < g.node_count(); ++i) cand[i] = i;
  std::vector<std::int32_t> clique;
  expand(adj, clique, cand, result.nodes);
  return result;  // DFS pushes ascending, so nodes are already sorted
}

PlantedClique planted_clique(std::int32_t n, double edge_prob, std::int32_t k,
                             std::uint64_t seed) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  if (edge_prob < 0.0 || edge_prob > 1.0) throw std::invalid_argument("edge_prob outside [0,1]");
  Rng rng(seed);

  // Fisher-Yates prefix for the planted member set
  std::vector<std::int32_t> perm(n);
  for (std::int32_t i = 0; i < n; ++i) perm[i] = i;
  for (std::int32_t i = 0; i < k; ++i) {
    auto j = i + static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(perm[i], perm[j]);
  }
  std::vector<std::int32_t> planted(perm.begin(), perm.begin() + k);
  std::sort(planted.begin(), planted.end());
  std::vector<char> in_clique(n, 0);
  for (std::int32_t v : planted) in_clique[v] = 1;

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j = i + 1; j < n; ++j) {
      bool forced = in_clique[i] && in_clique[j];
      double u = rng.uniform01();  // drawn unconditionally to keep the stream aligned
      if (forced || u < edge_prob) edges.emplace_back(i, j);
    }

  PlantedClique out;
  out.graph = Graph::from_edges(n, edges);
  out.planted = std::move(planted);
  return out;
}

}  // namespace cliquemine
