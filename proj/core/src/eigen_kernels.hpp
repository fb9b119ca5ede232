// Dense symmetric eigensolvers on flat row-major buffers. No allocation, so
// callers can reuse workspaces in enumeration loops.

#pragma once

namespace specgap::detail {

inline constexpr int kQlMaxIter = 50;

// Householder reduction to tridiagonal form followed by implicit-shift QL.
// a: n*n row-major symmetric input, destroyed. d: n eigenvalues, nonincreasing
// on success. e: n-sized scratch. If want_vecs, a ends up holding orthonormal
// eigenvectors as columns (a[k*n+c] = component k of the eigenvector paired
// with d[c]). Returns false if some eigenvalue fails to converge within
// kQlMaxIter implicit-shift iterations.
bool sym_eigen_ql(int n, double* a, double* d, double* e, bool want_vecs);

// Cyclic Jacobi rotations; the independent cross-check route.
// a destroyed; d as above; v (nullable, n*n) receives eigenvector columns.
// Returns false if the off-diagonal mass fails to vanish in max_sweeps.
bool sym_eigen_jacobi(int n, double* a, double* d, double* v, int max_sweeps = 64);

}  // namespace specgap::detail
