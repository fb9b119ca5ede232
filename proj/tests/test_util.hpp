#pragma once

#include <random>
#include <vector>

#include "specgap/graph.hpp"

namespace testutil {

inline specgap::LoopedGraph random_looped_graph(std::mt19937_64& rng, int n,
                                                bool allow_loops = true) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p_edge = 0.1 + 0.8 * unit(rng);
  const double p_loop = allow_loops ? unit(rng) : 0.0;
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (allow_loops && unit(rng) < p_loop) adj[static_cast<std::size_t>(i) * n + i] = 1;
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < p_edge)
        adj[static_cast<std::size_t>(i) * n + j] = adj[static_cast<std::size_t>(j) * n + i] = 1;
  }
  return specgap::LoopedGraph::from_matrix(n, std::move(adj));
}

// Graph of the upper-triangle bitmask (diagonal included), the enumeration
// order used throughout: (0,0),(0,1),...,(0,n-1),(1,1),...
inline specgap::LoopedGraph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++b)
      if ((mask >> b) & 1u) adj[static_cast<std::size_t>(i) * n + j] =
                                adj[static_cast<std::size_t>(j) * n + i] = 1;
  return specgap::LoopedGraph::from_matrix(n, std::move(adj));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
  return p;
}

}  // namespace testutil
