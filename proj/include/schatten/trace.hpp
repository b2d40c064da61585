#pragma once
// Trace formulas on the diagonal: the raw weighted diagonal sum, dyadic
// cell-averaged regularizations of it, and the eigenvalue sum they should
// both converge to for well-behaved kernels.

#include <string>
#include <vector>

#include "schatten/kernel.hpp"

namespace schatten {

struct TraceReport {
  Complex diagonal = 0.0;             // sum_i w_i K(x_i, x_i)
  std::vector<Complex> averaged;      // level j = 1 .. max_level
  Complex eigen = 0.0;                // eigenvalue sum (of the reference kernel)
  std::vector<std::string> flags;     // "diagonal-pathology", "non-convergent-averaging"
};

// sum_i w_i K(x_i, x_i); requires matching square grids.
Complex diagonal_trace(const DiscretizedKernel& k);

// Replace the kernel by its average over product cells, the grid split into
// 2^level near-equal contiguous blocks per axis (level 0 = one global cell).
// 1-d grids only; averages are quadrature-weighted.
DiscretizedKernel dyadic_average(const DiscretizedKernel& k, int level);

// Sum of the eigenvalues of the weighted operator matrix.
Complex eigen_trace(const DiscretizedKernel& k);

// Diagonal trace at every averaging level up to max_level, compared with the
// eigenvalue trace.  When the kernel under test differs from the operator it
// samples on a null set (a corrupted diagonal, say), pass the clean kernel as
// reference: the eigenvalue trace is taken from it, and the flags detect that
// the raw diagonal disagrees while the averaged diagonal recovers it.
TraceReport averaged_trace(const DiscretizedKernel& k, int max_level,
                           const DiscretizedKernel* reference = nullptr);

}  // namespace schatten
