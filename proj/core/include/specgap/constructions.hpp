#pragma once

#include <map>
#include <string>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

/// Symmetric +-1 matrix H with H H^T = order * I. The factory below only
/// produces Sylvester orders, which are additionally trace free -- needed so
/// the derived equality graphs get a sign-balanced spectrum.
struct HadamardMatrix {
  int order = 0;
  std::vector<int> entries;  // row-major, +1 / -1

  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
  bool is_valid() const;  // symmetric, H H^T = order*I, trace 0 for order >= 2
};

/// Sylvester doubling starting from [[1,1],[1,-1]]; order 2^m, m >= 1.
HadamardMatrix sylvester_hadamard(int m);

/// The 4k-vertex looped graph with adjacency (K (x) H + J)/2 built from the
/// order-2k Sylvester matrix, K = [[1,-1],[-1,1]]. Its eigenvalue gap
/// lambda_{k+1} - lambda_{n-k+1} meets the n/sqrt(2k) ceiling exactly.
/// k must be a power of two (the factory's available orders).
LoopedGraph hadamard_equality_graph(int k);

/// Path on 4 vertices with loops on both endpoints.
LoopedGraph closed_path_p4();

/// K_{j+2} disjoint union K*_{j+1} (every vertex of the second clique looped);
/// 2j+3 vertices, j >= 1.
LoopedGraph clique_union_closed(int j);

/// Complete bipartite K_{i+1,i} with loops on the larger side; 2i+1 vertices,
/// i >= 1.
LoopedGraph half_closed_bipartite(int i);

/// K_n with loops added on the first t vertices, 0 <= t <= n.
LoopedGraph clique_with_loops(int n, int t);

/// Registry of named families for the CLI. Parameter keys are "i", "j", "k",
/// "n", "t" as each family requires.
LoopedGraph make_construction(const std::string& name, const std::map<std::string, int>& params);
std::vector<std::string> construction_names();
std::string construction_help();

}  // namespace specgap
