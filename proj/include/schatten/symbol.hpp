#pragma once
// Diagonal (multiplier) operators: lattice weights, Fourier-side weights,
// discretized oscillator Hamiltonians; application of a multiplier to a
// kernel; eigenvalue-counting fits and the Schatten threshold they imply.

#include <array>
#include <string>
#include <vector>

#include "schatten/kernel.hpp"
#include "schatten/types.hpp"

namespace schatten {

enum class SymbolBasis {
  lattice_site,   // eigenvalues aligned with lattice grid points
  fourier_mode,   // eigenvalues aligned with torus DFT frequencies
  oscillator,     // eigenvalues of a discretized differential operator, ascending
};

struct DiagonalSymbol {
  SymbolBasis basis = SymbolBasis::lattice_site;
  RealVector eigenvalues;
  // Leading eigenvalues accurate enough to feed a counting fit.  Equals
  // eigenvalues.size() except for discretized operators, where box truncation
  // and grid error corrupt the upper part of the spectrum.
  int trusted_count = 0;
  std::string label;
};

// Fit of the counting function: N(lambda) <= constant * (1+lambda)^exponent,
// with the constant inflated so the bound actually holds on the fitted range.
struct CountingFit {
  double exponent = 0.0;
  double constant = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double residual = 0.0;  // rms residual of the log-log fit
};

// (1 + |k|)^alpha at every lattice site k (|k| = Euclidean norm).
DiagonalSymbol lattice_weight_symbol(const Grid& g, double alpha);
// (1 + |xi|^2)^{mu/2} at every DFT frequency xi of a torus grid.
DiagonalSymbol fourier_weight_symbol(const Grid& g, double mu);

// -d^2/dx^2 + |x|^a on [-box, box], Dirichlet walls, n interior points,
// second-order central differences.  Eigenvalues ascending.
DiagonalSymbol discretize_oscillator(double a, double box, int n);
// (-d^2/dx^2)^k + |x|^{2l}, same discretization with the difference matrix
// raised to the k-th power.
DiagonalSymbol discretize_poly_oscillator(int k, int l, double box, int n);

// Multiply the kernel by the diagonal operator along one variable:
// axis 'x' gives E K (acting on the row variable), axis 'y' gives K applied
// to E in the second argument.  Site symbols need a matching lattice grid,
// Fourier symbols a matching torus grid (applied by conjugating with the
// unitary DFT); oscillator symbols have no site representation and throw.
DiscretizedKernel apply_symbol(const DiagonalSymbol& e, const DiscretizedKernel& k,
                               char axis);

// Log-log fit of the counting function over trusted eigenvalues <= lambda_max
// (pass +infinity to use the whole trusted range).  Needs at least 50 of them.
CountingFit fit_counting(const DiagonalSymbol& e, double lambda_max);

// Fitted exponent p such that E^{-1} composed against a bounded kernel falls
// in the Schatten class S_q for every q > p.
double inverse_schatten_threshold(const DiagonalSymbol& e);

// Pointwise comparison of the three weight choices on a centered n x n
// integer frequency grid: product of one-variable weights of orders mu1, mu2,
// iterated min-order weight, and joint isotropic min-order weight.  The
// max ratios certify joint <= iterated <= product (ratios <= 1).
struct SobolevInclusionCheck {
  double mu1 = 0.0, mu2 = 0.0;
  double max_joint_over_iterated = 0.0;
  double max_iterated_over_product = 0.0;
};
std::vector<SobolevInclusionCheck> sobolev_inclusion_check(
    int points_per_axis, const std::vector<std::array<double, 2>>& order_pairs);

}  // namespace schatten
