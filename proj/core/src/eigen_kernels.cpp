#include "eigen_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <vector>

namespace specgap::detail {
namespace {

// Householder reduction of the symmetric matrix a to tridiagonal form
// (diagonal d, subdiagonal e[1..n-1], e[0]=0). With want_vecs the orthogonal
// transform is accumulated in a.
void householder(int n, double* a, double* d, double* e, bool want_vecs) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (want_vecs) A(j, i) = A(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;

  if (want_vecs) {
    for (int i = 0; i < n; ++i) {
      const int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
          for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
        }
      }
      d[i] = A(i, i);
      A(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
    }
  } else {
    for (int i = 0; i < n; ++i) d[i] = A(i, i);
  }
}

// Implicit-shift QL iteration on the tridiagonal (d, e). z is the n*n matrix
// whose columns get rotated along (pass nullptr to skip).
bool tridiag_ql(int n, double* d, double* e, double* z) {
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kQlMaxIter) return false;
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (int k = 0; k < n; ++k) {
              f = z[static_cast<std::size_t>(k) * n + i + 1];
              z[static_cast<std::size_t>(k) * n + i + 1] =
                  s * z[static_cast<std::size_t>(k) * n + i] + c * f;
              z[static_cast<std::size_t>(k) * n + i] =
                  c * z[static_cast<std::size_t>(k) * n + i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  return true;
}

void sort_nonincreasing(int n, double* d, double* vecs) {
  if (vecs == nullptr) {
    std::sort(d, d + n, [](double x, double y) { return x > y; });
    return;
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return d[x] > d[y]; });
  std::vector<double> dv(d, d + n);
  std::vector<double> col(n);
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c) {
    d[c] = dv[idx[c]];
    for (int k = 0; k < n; ++k)
      m[static_cast<std::size_t>(k) * n + c] = vecs[static_cast<std::size_t>(k) * n + idx[c]];
  }
  std::copy(m.begin(), m.end(), vecs);
}

}  // namespace

bool sym_eigen_ql(int n, double* a, double* d, double* e, bool want_vecs) {
  if (n == 1) {
    d[0] = a[0];
    if (want_vecs) a[0] = 1.0;
    return true;
  }
  householder(n, a, d, e, want_vecs);
  if (!tridiag_ql(n, d, e, want_vecs ? a : nullptr)) return false;
  sort_nonincreasing(n, d, want_vecs ? a : nullptr);
  return true;
}

bool sym_eigen_jacobi(int n, double* a, double* d, double* v, int max_sweeps) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  if (v != nullptr) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = (i == j) ? 1.0 : 0.0;
  }
  if (n == 1) {
    d[0] = a[0];
    return true;
  }

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off += std::abs(A(p, q));
    if (off == 0.0) {
      for (int i = 0; i < n; ++i) d[i] = A(i, i);
      sort_nonincreasing(n, d, v);
      return true;
    }
    // Rotate away small elements too once the first sweeps are done.
    const double thresh = (sweep < 3) ? 0.2 * off / (static_cast<double>(n) * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        const double small = 1e-14 * (std::abs(A(p, p)) + std::abs(A(q, q)) + 1.0);
        if (std::abs(apq) <= small && sweep > 3) {
          A(p, q) = A(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= thresh) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = A(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = A(r, p), arq = A(r, q);
            A(r, p) = A(p, r) = arp - s * (arq + tau * arp);
            A(r, q) = A(q, r) = arq + s * (arp - tau * arq);
          }
          if (v != nullptr) {
            const double vrp = v[static_cast<std::size_t>(r) * n + p];
            const double vrq = v[static_cast<std::size_t>(r) * n + q];
            v[static_cast<std::size_t>(r) * n + p] = vrp - s * (vrq + tau * vrp);
            v[static_cast<std::size_t>(r) * n + q] = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }

  // Accept whatever is left only if it is already numerically diagonal.
  double off = 0.0;
  for (int p = 0; p < n - 1; ++p)
    for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(A(p, q)));
  if (off > 1e-12) return false;
  for (int i = 0; i < n; ++i) d[i] = A(i, i);
  sort_nonincreasing(n, d, v);
  return true;
}

}  // namespace specgap::detail
