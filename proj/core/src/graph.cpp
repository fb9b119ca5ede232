#include "specgap/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace specgap {

LoopedGraph LoopedGraph::build(int n, std::span<const std::pair<int, int>> edges,
                               std::span<const int> loops) {
  if (n <= 0) throw std::invalid_argument("LoopedGraph: order must be positive");
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  auto cell = [&](int i, int j) -> std::uint8_t& {
    return adj[static_cast<std::size_t>(i) * n + j];
  };
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("LoopedGraph: edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("LoopedGraph: self-pair in edge list; pass loops separately");
    if (cell(u, v))
      throw std::invalid_argument("LoopedGraph: duplicate edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    cell(u, v) = cell(v, u) = 1;
  }
  for (int v : loops) {
    if (v < 0 || v >= n) throw std::invalid_argument("LoopedGraph: loop vertex out of range");
    if (cell(v, v)) throw std::invalid_argument("LoopedGraph: duplicate loop at " + std::to_string(v));
    cell(v, v) = 1;
  }
  return LoopedGraph(n, std::move(adj));
}

LoopedGraph LoopedGraph::from_matrix(int n, std::vector<std::uint8_t> adj) {
  if (n <= 0) throw std::invalid_argument("LoopedGraph: order must be positive");
  if (adj.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("LoopedGraph: matrix size does not match order");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint8_t x = adj[static_cast<std::size_t>(i) * n + j];
      if (x != 0 && x != 1) throw std::invalid_argument("LoopedGraph: entries must be 0 or 1");
      if (x != adj[static_cast<std::size_t>(j) * n + i])
        throw std::invalid_argument("LoopedGraph: matrix must be symmetric");
    }
  return LoopedGraph(n, std::move(adj));
}

int LoopedGraph::edge_count() const noexcept {
  int m = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) m += at(i, j);
  return m;
}

int LoopedGraph::loop_count() const noexcept {
  int m = 0;
  for (int i = 0; i < n_; ++i) m += at(i, i);
  return m;
}

LoopedGraph underlying_simple(const LoopedGraph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> adj(g.matrix().begin(), g.matrix().end());
  for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(i) * n + i] = 0;
  return LoopedGraph::from_matrix(n, std::move(adj));
}

LoopedGraph blowup(const LoopedGraph& g, int t) {
  if (t < 1) throw std::invalid_argument("blowup: t must be >= 1");
  const int n = g.order();
  const int m = n * t;
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!g.at(i, j)) continue;
      for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
          adj[static_cast<std::size_t>(i * t + a) * m + (j * t + b)] = 1;
    }
  return LoopedGraph::from_matrix(m, std::move(adj));
}

LoopedGraph closed_complement(const LoopedGraph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> adj(g.matrix().begin(), g.matrix().end());
  for (auto& x : adj) x = static_cast<std::uint8_t>(1 - x);
  return LoopedGraph::from_matrix(n, std::move(adj));
}

LoopedGraph disjoint_union(const LoopedGraph& g, const LoopedGraph& h) {
  const int n = g.order(), m = h.order(), nm = n + m;
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(nm) * nm, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj[static_cast<std::size_t>(i) * nm + j] = static_cast<std::uint8_t>(g.at(i, j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      adj[static_cast<std::size_t>(n + i) * nm + (n + j)] = static_cast<std::uint8_t>(h.at(i, j));
  return LoopedGraph::from_matrix(nm, std::move(adj));
}

LoopedGraph relabel(const LoopedGraph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("relabel: not a permutation");
    seen[v] = true;
  }
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(g.at(perm[i], perm[j]));
  return LoopedGraph::from_matrix(n, std::move(adj));
}

DegreeProfile degree_profile(const LoopedGraph& g) {
  const int n = g.order();
  DegreeProfile p;
  p.degrees.resize(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.degrees[i] += g.at(i, j);
  p.average = std::accumulate(p.degrees.begin(), p.degrees.end(), 0.0) / n;
  return p;
}

}  // namespace specgap
