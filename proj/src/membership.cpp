#include "schatten/membership.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schatten {

namespace {

void require_positive(double p, const char* who) {
  if (!(p > 0)) throw std::invalid_argument(std::string(who) + ": exponents must be positive");
}

double conjugate_exponent(double q) {
  return q / (q - 1.0);
}

// Power sum of the integrability condition at exponent q, restricted to the
// rows/cols selected by the box predicate.  q = 2 gives the squared
// Hilbert-Schmidt norm; 1 < q < 2 gives the q'-th power of the mixed norm.
template <typename RowPred, typename ColPred>
double condition_power_sum(const DiscretizedKernel& a, double q, RowPred in_row,
                           ColPred in_col) {
  const double qp = conjugate_exponent(q);
  double outer = 0;
  for (Eigen::Index j = 0; j < a.values.cols(); ++j) {
    if (!in_col(j)) continue;
    double inner = 0;
    for (Eigen::Index i = 0; i < a.values.rows(); ++i) {
      if (!in_row(i)) continue;
      inner += a.row_grid.weights(i) * std::pow(std::abs(a.values(i, j)), q);
    }
    outer += a.col_grid.weights(j) * std::pow(inner, qp / q);
  }
  return outer;
}

}  // namespace

double predict_r_main(double p1, double p2) {
  require_positive(p1, "predict_r_main");
  require_positive(p2, "predict_r_main");
  return 1.0 / (0.5 + 1.0 / p1 + 1.0 / p2);
}

double predict_r_mixed(double q, const std::vector<double>& ps) {
  if (!(q > 1.0 && q <= 2.0))
    throw std::invalid_argument("predict_r_mixed: need 1 < q <= 2");
  if (ps.empty()) throw std::invalid_argument("predict_r_mixed: no exponents");
  double inv = 1.0 - 1.0 / q;  // 1/q'
  for (double p : ps) {
    require_positive(p, "predict_r_mixed");
    inv += 1.0 / p;
  }
  return 1.0 / inv;
}

double predict_decay(double p1, double p2, double q) {
  require_positive(p1, "predict_decay");
  require_positive(p2, "predict_decay");
  if (!(q > 1.0 && q <= 2.0))
    throw std::invalid_argument("predict_decay: need 1 < q <= 2");
  return (1.0 - 1.0 / q) + 1.0 / p1 + 1.0 / p2;
}

InequalityCheck russo_check(const DiscretizedKernel& k, double p) {
  if (!(p > 1.0 && p < 2.0))
    throw std::invalid_argument("russo_check: need 1 < p < 2");
  const double pp = conjugate_exponent(p);
  const double lhs = schatten_norm(singular_values(k.operator_matrix()), pp);
  const double rhs =
      std::sqrt(mixed_norm(k, p, pp) * mixed_norm(adjoint_kernel(k), p, pp));
  return {lhs, rhs};
}

MembershipReport verify_membership(const DiscretizedKernel& k,
                                   const DiagonalSymbol& e1,
                                   const DiagonalSymbol& e2, double q) {
  if (!(q > 1.0 && q <= 2.0))
    throw std::invalid_argument("verify_membership: need 1 < q <= 2");

  // E2 acts on the first variable, E1 on the second.
  const DiscretizedKernel transformed = apply_symbol(e2, apply_symbol(e1, k, 'y'), 'x');
  const double qp = conjugate_exponent(q);

  MembershipReport rep;
  const auto all = [](Eigen::Index) { return true; };
  const double full_sum = condition_power_sum(transformed, q, all, all);

  if (k.row_grid.kind == GridKind::lattice) {
    // Finiteness probe: compare against the concentric box of half the
    // radius.  A condition sum that is still growing by more than 5% per
    // doubling is treated as divergent in the continuum limit.
    const double half_radius = k.row_grid.radius / 2.0;
    const auto in_half_row = [&](Eigen::Index i) {
      return k.row_grid.points.row(i).lpNorm<Eigen::Infinity>() <= half_radius;
    };
    const auto in_half_col = [&](Eigen::Index j) {
      return k.col_grid.points.row(j).lpNorm<Eigen::Infinity>() <= half_radius;
    };
    const double half_sum = condition_power_sum(transformed, q, in_half_row, in_half_col);
    rep.condition_drift = half_sum > 0 ? (full_sum - half_sum) / half_sum : 0.0;
    rep.condition_finite = rep.condition_drift <= 0.05;
  }

  if (q == 2.0) {
    rep.condition_norms["transformed_hs"] = std::sqrt(full_sum);
  } else {
    rep.condition_norms["transformed_mixed"] = std::pow(full_sum, 1.0 / qp);
    rep.condition_norms["transformed_adjoint_mixed"] =
        mixed_norm(adjoint_kernel(transformed), q, qp);
  }

  rep.fitted_p1 = inverse_schatten_threshold(e1);
  rep.fitted_p2 = inverse_schatten_threshold(e2);
  rep.predicted_r = q == 2.0 ? predict_r_main(rep.fitted_p1, rep.fitted_p2)
                             : predict_r_mixed(q, {rep.fitted_p1, rep.fitted_p2});
  rep.predicted_tau = predict_decay(rep.fitted_p1, rep.fitted_p2, q);

  rep.measured = fit_tail_exponent(singular_values(k.operator_matrix()));

  std::ostringstream notes;
  if (!rep.condition_finite) {
    rep.verdict = "inconclusive";
    notes << "condition sum grows " << 100.0 * rep.condition_drift
          << "% under box doubling; hypothesis not satisfied";
  } else if (rep.measured.super_polynomial ||
             rep.measured.exponent >= rep.predicted_tau - 0.05) {
    rep.verdict = "consistent";
    notes << "measured tail exponent " << rep.measured.exponent
          << " meets predicted decay " << rep.predicted_tau;
  } else {
    rep.verdict = "violated";
    notes << "measured tail exponent " << rep.measured.exponent
          << " falls short of predicted decay " << rep.predicted_tau;
  }
  rep.notes = notes.str();
  return rep;
}

}  // namespace schatten
