#pragma once
// Sufficient conditions for Schatten membership of a kernel operator given
// weighted square-integrability after diagonal transforms, the decay rates
// they predict, and the comparison of both against the measured spectrum.

#include <map>
#include <string>
#include <vector>

#include "schatten/symbol.hpp"

namespace schatten {

// 1/r = 1/2 + 1/p1 + 1/p2; the result always lies in (0, 2).
double predict_r_main(double p1, double p2);
// 1/r = 1/q' + sum_i 1/p_i with q' the conjugate of q in (1, 2]; the sum of
// reciprocals may exceed 1/2, so r can drop below the main-case floor.
double predict_r_mixed(double q, const std::vector<double>& ps);
// Decay exponent tau with s_k = o(k^{-tau}): tau = 1/q' + 1/p1 + 1/p2,
// reducing to 1/2 + 1/p1 + 1/p2 at q = 2.
double predict_decay(double p1, double p2, double q = 2.0);

// ||T||_{S_{p'}} <= sqrt( ||K||_{p,p'} ||K*||_{p,p'} ), 1 < p < 2.
InequalityCheck russo_check(const DiscretizedKernel& k, double p);

struct MembershipReport {
  bool condition_finite = true;
  double condition_drift = 0.0;  // relative growth of the condition sum when
                                 // the truncation box doubles (lattice only)
  std::map<std::string, double> condition_norms;
  double fitted_p1 = 0.0, fitted_p2 = 0.0;  // counting exponents of the symbols
  double predicted_r = 0.0;
  double predicted_tau = 0.0;
  TailFit measured;
  std::string verdict;  // "consistent" | "violated" | "inconclusive"
  std::string notes;
};

// Transform the kernel by e1 in the second variable and e2 in the first,
// evaluate the integrability condition at exponent q (q = 2 for the plain
// Hilbert-Schmidt case, 1 < q < 2 for the mixed-norm variant), fit the
// symbols' counting functions, and compare the predicted decay rate with the
// kernel's measured singular-value tail.
MembershipReport verify_membership(const DiscretizedKernel& k,
                                   const DiagonalSymbol& e1,
                                   const DiagonalSymbol& e2, double q = 2.0);

}  // namespace schatten
