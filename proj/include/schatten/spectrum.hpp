#pragma once
// Singular spectra, Schatten norms, log-log tail fits, and the classical
// s-number inequalities used as cross-checks everywhere else in the lab.

#include <string>
#include <vector>

#include "schatten/types.hpp"

namespace schatten {

struct SingularSpectrum {
  std::vector<double> values;  // nonincreasing, >= 0
  std::string source;          // free-text tag: which computation produced it

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }  // 0-based
};

// Least-squares line through (log k, log s_k) for k >= k_min (1-based index).
struct TailFit {
  double exponent = 0.0;      // s_k ~ const * k^{-exponent}
  double log_constant = 0.0;  // intercept of the fit
  double residual = 0.0;      // rms residual in log space
  int k_min = 1;              // first index actually used
  int k_max = 0;              // last index used (noise floor cuts the rest)
  bool super_polynomial = false;  // decay faster than any power; exponent unreliable
};

// lhs <= rhs expected; holds() leaves slack for rounding.
struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double abs_tol = 1e-9, double rel_tol = 1e-9) const {
    return lhs <= rhs + abs_tol + rel_tol * (rhs < 0 ? -rhs : rhs);
  }
  double slack() const { return rhs - lhs; }
};

// All singular values, nonincreasing.  Exactly-diagonal and exactly-real
// inputs take cheaper paths; the paths agree to tight tolerance (tested).
SingularSpectrum singular_values(const Matrix& m);
SingularSpectrum singular_values(const RealMatrix& m);

// Eigenvalues of a general square matrix, sorted by descending modulus.
std::vector<Complex> complex_eigenvalues(const Matrix& m);
// Eigenvalues of a Hermitian (resp. real symmetric) matrix, ascending.
// Throws if the input is not Hermitian to within an exact check.
RealVector hermitian_eigenvalues(const Matrix& m);
RealVector symmetric_eigenvalues(const RealMatrix& m);

// (sum_k s_k^p)^{1/p}; valid for every p > 0 (quasi-norm below p = 1).
double schatten_norm(const SingularSpectrum& s, double p);

// sum |lambda_k|^p <= sum s_k^p  over the full spectrum.
InequalityCheck weyl_check(const std::vector<Complex>& eigenvalues,
                           const SingularSpectrum& s, double p);
// s_{k+l-1}(BC) <= s_k(B) * s_l(C), indices 1-based.
InequalityCheck fan_check(const SingularSpectrum& product,
                          const SingularSpectrum& b, const SingularSpectrum& c,
                          int k, int l);
// ||AB||_r <= 2^{1/r} ||A||_q ||B||_p  with 1/r = 1/p + 1/q (r < 1 allowed).
InequalityCheck product_norm_check(const SingularSpectrum& ab,
                                   const SingularSpectrum& a,
                                   const SingularSpectrum& b, double p,
                                   double q);

// k_min <= 0 picks the default head cut max(8, n/40).  Values below
// 1e-12 * s_1 are treated as numerical zeros and excluded.
TailFit fit_tail_exponent(const SingularSpectrum& s, int k_min = 0);

// Cap the BLAS thread pool (the SCHATTEN_LAB_THREADS knob).  No-op if the
// backend ignores it.
void set_thread_cap(int threads);

}  // namespace schatten
