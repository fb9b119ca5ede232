#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace specgap {

/// Undirected graph on n vertices with at most one self-loop per vertex,
/// stored as a symmetric 0/1 adjacency matrix whose diagonal encodes the
/// loops. Values are immutable after construction; all operations below are
/// pure functions and safe to call concurrently.
class LoopedGraph {
 public:
  /// Assembles a graph from an explicit edge list and loop set.
  /// Vertex indices are 0-based. Rejects out-of-range indices, self-pairs in
  /// `edges` (loops go through `loops`), and duplicates.
  static LoopedGraph build(int n, std::span<const std::pair<int, int>> edges,
                           std::span<const int> loops);

  /// Wraps a row-major n*n matrix. Rejects non-symmetric or non-0/1 input.
  static LoopedGraph from_matrix(int n, std::vector<std::uint8_t> adj);

  int order() const noexcept { return n_; }
  int at(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j]; }
  bool has_loop(int v) const { return at(v, v) != 0; }

  int edge_count() const noexcept;  // off-diagonal edges
  int loop_count() const noexcept;

  /// Row-major n*n matrix view.
  std::span<const std::uint8_t> matrix() const noexcept { return adj_; }

  bool operator==(const LoopedGraph&) const = default;

 private:
  LoopedGraph(int n, std::vector<std::uint8_t> adj)
      : n_(n), adj_(std::move(adj)) {}

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

struct DegreeProfile {
  std::vector<int> degrees;  // row sums; a loop contributes 1
  double average = 0.0;
};

/// Zeroes the diagonal, keeping all vertices.
LoopedGraph underlying_simple(const LoopedGraph& g);

/// t-blowup: every vertex becomes an independent t-set, every edge a K_{t,t};
/// the adjacency matrix is the Kronecker expansion of A by the all-ones t*t
/// block, so a looped vertex blows up into a complete-with-loops block.
LoopedGraph blowup(const LoopedGraph& g, int t);

/// Flips every entry including the diagonal (adjacency J - A).
LoopedGraph closed_complement(const LoopedGraph& g);

/// Block-diagonal union; the spectrum is the multiset union of the parts.
LoopedGraph disjoint_union(const LoopedGraph& g, const LoopedGraph& h);

/// Applies a vertex permutation: vertex v of the result is perm[v] of g.
LoopedGraph relabel(const LoopedGraph& g, std::span<const int> perm);

DegreeProfile degree_profile(const LoopedGraph& g);

/// Largest order accepted by canonical_form / isomorphic.
inline constexpr int kCanonicalMaxOrder = 12;

/// Canonical representative of the isomorphism class, rendered as the
/// row-major '0'/'1' string of the canonically relabelled adjacency matrix.
/// Two graphs are isomorphic (loops respected) iff the strings are equal.
/// Exact branch-and-bound over vertex orderings; throws above
/// kCanonicalMaxOrder.
std::string canonical_form(const LoopedGraph& g);

bool isomorphic(const LoopedGraph& g, const LoopedGraph& h);

}  // namespace specgap
