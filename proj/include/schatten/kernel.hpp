#pragma once
// Kernels sampled on a pair of grids, together with the weighted matrix whose
// singular values discretize the operator's s-numbers, the norms entering the
// membership conditions, and a plain-text serialization.

#include <array>
#include <functional>
#include <string>

#include "schatten/grid.hpp"
#include "schatten/spectrum.hpp"
#include "schatten/types.hpp"

namespace schatten {

// Kernel evaluated at grid points: values(i, j) = K(x_i, y_j).
struct DiscretizedKernel {
  Grid row_grid;  // x domain
  Grid col_grid;  // y domain
  Matrix values;

  // sqrt(W_x) K sqrt(W_y): its singular values approximate the s-numbers of
  // the integral operator f -> integral K(x,y) f(y) dy.
  Matrix operator_matrix() const;
};

using KernelFunction =
    std::function<Complex(const Eigen::RowVectorXd& x, const Eigen::RowVectorXd& y)>;

// Sample f on an arbitrary pair of grids (the generic builder the thin
// domain-specific wrappers go through).
DiscretizedKernel build_kernel(Grid row_grid, Grid col_grid, const KernelFunction& f);

DiscretizedKernel build_torus_kernel(int dimension, int points_per_axis,
                                     const KernelFunction& f);
DiscretizedKernel build_lattice_kernel(int dimension, int radius,
                                       const KernelFunction& f);
DiscretizedKernel build_interval_kernel(
    const std::vector<std::array<double, 2>>& intervals, int points_per_interval,
    const KernelFunction& f);

// Convolution kernel K(x,y) = (1/2pi) sum_k c_k e^{ik(x-y)} on the circle,
// sampled on the 2N+1 point torus so that the operator's singular values are
// exactly the |c_k|.  c has length 2N+1, c[j] belonging to frequency j-N.
struct ConvolutionKernel {
  DiscretizedKernel kernel;
  SingularSpectrum exact;  // sorted |c_k|, what the SVD must reproduce
};
ConvolutionKernel build_convolution_kernel(int max_frequency, const Vector& c);

// Riesz kernel c_alpha |x-y|^{alpha-1} on a 1-d interval grid, 0 < alpha < 1.
// Diagonal entries carry the cell average of the singularity, so the matrix
// stays positive definite.
DiscretizedKernel build_riesz_kernel(const Grid& g, double alpha);
double riesz_constant(double alpha);  // 2^{a-1} pi^{-1/2} Gamma(a/2)/Gamma((1-a)/2)

// sqrt( sum_{ij} w_i w_j |K(x_i,y_j)|^2 ) = Frobenius norm of operator_matrix.
double hilbert_schmidt_norm(const DiscretizedKernel& k);

// Mixed norm: exponent p over x (rows) inside, exponent q over y (cols)
// outside.  Both exponents finite and >= 1.
double mixed_norm(const DiscretizedKernel& k, double p, double q);

// K*(x,y) = conj(K(y,x)) with the grids swapped.
DiscretizedKernel adjoint_kernel(const DiscretizedKernel& k);

void save_kernel(const DiscretizedKernel& k, const std::string& path);
DiscretizedKernel load_kernel(const std::string& path);

}  // namespace schatten
