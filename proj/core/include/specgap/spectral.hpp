#pragma once

#include <span>
#include <vector>

#include "specgap/graph.hpp"

namespace specgap {

/// Index pair (i, j) selecting the eigenvalue gap lambda_{i+1} - lambda_{n-j}
/// (1-based positions into the nonincreasing spectrum).
struct SpreadQuery {
  int i = 0;
  int j = 0;
  bool valid_for(int n) const noexcept { return i >= 0 && j >= 0 && i < n && j < n; }
};

/// Residual contract of the solver: max|A v - lambda v| <= tol * n * max(1, |A|_max).
inline constexpr double kSolverTolPerN = 1e-10;

struct Spectrum {
  std::vector<double> values;  // nonincreasing
  std::vector<double> basis;   // n*n row-major; column c is the eigenvector of values[c]
  double residual = 0.0;       // max |(A V - V diag(values))_{kc}|
  int order() const noexcept { return static_cast<int>(values.size()); }
  bool has_basis() const noexcept { return !basis.empty(); }
};

/// Full eigendecomposition (Householder tridiagonalization + implicit-shift
/// QL) with orthonormal basis and achieved residual. Throws on the (never yet
/// observed) failure to converge within the iteration cap.
Spectrum eigenvalues(const LoopedGraph& g);

/// Eigenvalues only, same pipeline, cheaper.
std::vector<double> eigenvalues_only(const LoopedGraph& g);

/// Independent route via cyclic Jacobi rotations; used to cross-validate the
/// QL pipeline.
Spectrum jacobi_eigenvalues(const LoopedGraph& g);

/// lambda_{i+1} - lambda_{n-j}. May be negative when i+1 > n-j; returned as-is.
double spread(const LoopedGraph& g, SpreadQuery q);

/// spread(g, q) / n.
double spread_ratio(const LoopedGraph& g, SpreadQuery q);

/// Absolute eigenvalues, nonincreasing (the singular values, A being symmetric).
std::vector<double> singular_values(const LoopedGraph& g);

/// Reusable-workspace eigenvalue evaluator for enumeration loops. Not thread
/// safe; give each worker its own instance.
class SpectrumEvaluator {
 public:
  explicit SpectrumEvaluator(int max_order);

  /// Nonincreasing eigenvalues; the span is valid until the next call.
  std::span<const double> operator()(const LoopedGraph& g);

  /// Same, for a raw symmetric matrix (copied into the workspace).
  std::span<const double> eval_dense(int n, const double* a);

 private:
  int max_n_;
  std::vector<double> a_, d_, e_;
};

}  // namespace specgap
