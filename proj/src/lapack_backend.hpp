#pragma once
// Thin wrappers around the LAPACKE dense solvers.  Arguments are taken by
// value because LAPACK destroys its input.  Only lapack_backend.cpp includes
// lapacke.h; the rest of the code sees Eigen types only.

#include "schatten/types.hpp"

namespace schatten::backend {

// Singular values, nonincreasing (dgesdd / zgesdd, values only).
RealVector svd_values(RealMatrix a);
RealVector svd_values(Matrix a);

// Eigenvalues ascending (dsyevd / zheevd); input assumed symmetric/Hermitian.
RealVector symmetric_eigenvalues(RealMatrix a);
RealVector hermitian_eigenvalues(Matrix a);

// Eigenvalues of a general square matrix, unordered (zgeev).
Vector general_eigenvalues(Matrix a);

// Caps the BLAS thread pool (exposed so the CLI can honor its env knob).
void set_thread_cap(int n);

}  // namespace schatten::backend
