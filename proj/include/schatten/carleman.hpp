#pragma once
// A bounded periodic function whose convolution operator has singular values
// summable in no l^p with p < 2: lacunary blocks of sign polynomials with
// flat sup norm, scaled so every l^p sum with p < 2 diverges while the
// coefficients stay square-summable.

#include <vector>

#include "schatten/kernel.hpp"
#include "schatten/spectrum.hpp"

namespace schatten {

// Signs eps_0..eps_{length-1}: eps_j = (-1)^{number of "11" pairs in binary j}.
std::vector<int> rudin_shapiro(int length);

struct CoefficientSequence {
  std::vector<Complex> coefficients;  // index = frequency >= 0; zero below 2
  int blocks = 0;
  int max_frequency() const { return int(coefficients.size()) - 1; }
};

// Block n = 1..blocks occupies frequencies [2^n, 2^{n+1}) with coefficients
// 2^{-n/2} n^{-2} times the sign sequence.
CoefficientSequence carleman_coefficients(int blocks);

// sum over block n of |c_k|^p, in closed form: 2^{n(1-p/2)} n^{-2p}.
double block_power_sum(int block, double p);

// Max of |sum_k c_k e^{ik t}| on a uniform grid with at least `oversample`
// points per fastest oscillation (FFT evaluation).
double sup_norm_estimate(const CoefficientSequence& c, int oversample = 4);

// The convolution kernel the coefficients generate, as a torus discretization
// whose singular values are exactly the retained |c_k|.  Frequencies above
// mode_cap are dropped (capped reports it) to keep the dense matrix at
// 2*mode_cap+1 rows.
struct CarlemanOperator {
  DiscretizedKernel kernel;
  SingularSpectrum exact;   // sorted retained |c_k|, zero-padded to matrix size
  bool capped = false;
  int mode_cap = 0;
  int retained_max_frequency = 0;
};
CarlemanOperator carleman_operator(const CoefficientSequence& c, int mode_cap = 4095);

}  // namespace schatten
