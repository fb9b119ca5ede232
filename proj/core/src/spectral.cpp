#include "specgap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eigen_kernels.hpp"

namespace specgap {
namespace {

std::vector<double> to_dense(const LoopedGraph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  auto m = g.matrix();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = m[k];
  return a;
}

double residual_max(const LoopedGraph& g, const std::vector<double>& values,
                    const std::vector<double>& basis) {
  const int n = g.order();
  double worst = 0.0;
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < n; ++k) {
      double av = 0.0;
      for (int j = 0; j < n; ++j)
        av += g.at(k, j) * basis[static_cast<std::size_t>(j) * n + c];
      worst = std::max(worst, std::abs(av - values[c] * basis[static_cast<std::size_t>(k) * n + c]));
    }
  }
  return worst;
}

[[noreturn]] void throw_no_convergence(const char* which, double leftover) {
  throw std::runtime_error(std::string(which) +
                           ": eigensolver failed to converge, leftover off-diagonal ~" +
                           std::to_string(leftover));
}

}  // namespace

Spectrum eigenvalues(const LoopedGraph& g) {
  const int n = g.order();
  Spectrum s;
  s.values.resize(n);
  s.basis = to_dense(g);
  std::vector<double> e(n);
  if (!detail::sym_eigen_ql(n, s.basis.data(), s.values.data(), e.data(), true))
    throw_no_convergence("eigenvalues", std::abs(e[0]));
  s.residual = residual_max(g, s.values, s.basis);
  return s;
}

std::vector<double> eigenvalues_only(const LoopedGraph& g) {
  const int n = g.order();
  std::vector<double> a = to_dense(g);
  std::vector<double> d(n), e(n);
  if (!detail::sym_eigen_ql(n, a.data(), d.data(), e.data(), false))
    throw_no_convergence("eigenvalues_only", std::abs(e[0]));
  return d;
}

Spectrum jacobi_eigenvalues(const LoopedGraph& g) {
  const int n = g.order();
  Spectrum s;
  s.values.resize(n);
  s.basis.resize(static_cast<std::size_t>(n) * n);
  std::vector<double> a = to_dense(g);
  if (!detail::sym_eigen_jacobi(n, a.data(), s.values.data(), s.basis.data()))
    throw_no_convergence("jacobi_eigenvalues", 0.0);
  s.residual = residual_max(g, s.values, s.basis);
  return s;
}

double spread(const LoopedGraph& g, SpreadQuery q) {
  const int n = g.order();
  if (!q.valid_for(n))
    throw std::invalid_argument("spread: index pair (" + std::to_string(q.i) + "," +
                                std::to_string(q.j) + ") invalid for order " + std::to_string(n));
  const auto vals = eigenvalues_only(g);
  return vals[q.i] - vals[n - 1 - q.j];
}

double spread_ratio(const LoopedGraph& g, SpreadQuery q) {
  return spread(g, q) / g.order();
}

std::vector<double> singular_values(const LoopedGraph& g) {
  auto v = eigenvalues_only(g);
  for (auto& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end(), [](double a, double b) { return a > b; });
  return v;
}

SpectrumEvaluator::SpectrumEvaluator(int max_order)
    : max_n_(max_order),
      a_(static_cast<std::size_t>(max_order) * max_order),
      d_(max_order),
      e_(max_order) {
  if (max_order < 1) throw std::invalid_argument("SpectrumEvaluator: bad max order");
}

std::span<const double> SpectrumEvaluator::operator()(const LoopedGraph& g) {
  const int n = g.order();
  if (n > max_n_) throw std::invalid_argument("SpectrumEvaluator: order exceeds workspace");
  auto m = g.matrix();
  for (std::size_t k = 0; k < m.size(); ++k) a_[k] = m[k];
  if (!detail::sym_eigen_ql(n, a_.data(), d_.data(), e_.data(), false))
    throw_no_convergence("SpectrumEvaluator", std::abs(e_[0]));
  return {d_.data(), static_cast<std::size_t>(n)};
}

std::span<const double> SpectrumEvaluator::eval_dense(int n, const double* a) {
  if (n > max_n_) throw std::invalid_argument("SpectrumEvaluator: order exceeds workspace");
  std::copy(a, a + static_cast<std::size_t>(n) * n, a_.begin());
  if (!detail::sym_eigen_ql(n, a_.data(), d_.data(), e_.data(), false))
    throw_no_convergence("SpectrumEvaluator", std::abs(e_[0]));
  return {d_.data(), static_cast<std::size_t>(n)};
}

}  // namespace specgap
