#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specgap/graph.hpp"
#include "specgap/spectral.hpp"

namespace specgap::search {

/// Search space: symmetric 0/1 matrices with free diagonal (loops allowed) or
/// zero diagonal (simple graphs).
enum class Space { Loops, Simple };

/// Upper-triangle bit budget for exhaustive enumeration (2^28 matrices).
inline constexpr int kMaxExhaustiveBits = 28;

/// Values within this slack of the maximum count as tied maximizers, so that
/// algebraically equal optima land in one group despite rounding.
inline constexpr double kValueSlack = 1e-9;

struct SearchRecord {
  int n = 0;
  SpreadQuery query;
  Space space = Space::Loops;
  double best_value = 0.0;
  double best_ratio = 0.0;
  std::vector<LoopedGraph> witnesses;  // iso-class representatives when n small
  std::uint64_t maximizer_count = 0;   // labeled matrices within slack of the max
  std::string method;                  // "exhaustive" | "hill-climb"
  std::uint64_t seed = 0;
  std::uint64_t work = 0;              // matrices evaluated

  /// Line-oriented text form: cell, value, ratio, method, seed, work,
  /// maximizer count, then one sparse6 line per witness. Independent of the
  /// thread count that produced the record.
  std::string serialize() const;
};

/// Enumerates every matrix in the space, partitioned across threads; merging
/// is an order-independent max-reduction with ties kept and sorted by bitmask,
/// so the record is bit-identical for any thread count. Witnesses are
/// deduplicated up to isomorphism when n <= kCanonicalMaxOrder (otherwise the
/// enumeration-order first maximizer is kept). slack overrides the
/// tie-grouping tolerance (>= 1e-14).
SearchRecord exhaustive(int n, SpreadQuery q, Space space, int threads = 1,
                        double slack = kValueSlack);

/// Steepest-ascent over single entry flips with bounded plateau moves and
/// randomized restarts; deterministic for a fixed seed, any thread count.
SearchRecord hill_climb(int n, SpreadQuery q, Space space, std::uint64_t seed,
                        int restarts = 200, int max_steps = 1000, int threads = 1);

/// True iff no matrix in the space beats candidate_ratio * n by more than
/// slack. Requires exhaustive feasibility.
bool verify_no_better(int n, SpreadQuery q, Space space, double candidate_ratio,
                      int threads = 1, double slack = kValueSlack);

}  // namespace specgap::search
