#include "schatten/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lapack_backend.hpp"

namespace schatten {

namespace {

void require_nonempty_finite(Eigen::Index rows, Eigen::Index cols, bool finite) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("singular_values: empty matrix");
  if (!finite)
    throw std::invalid_argument("singular_values: non-finite entries");
}

// True iff every off-diagonal entry is exactly zero (bitwise, deliberate:
// the fast path must not silently approximate a nearly-diagonal matrix).
template <typename Mat>
bool exactly_diagonal(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && m(i, j) != typename Mat::Scalar(0)) return false;
  return true;
}

SingularSpectrum from_sorted(RealVector s, std::string source) {
  SingularSpectrum out;
  out.values.assign(s.data(), s.data() + s.size());
  out.source = std::move(source);
  return out;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y,
                 std::size_t lo, std::size_t hi, double* intercept = nullptr) {
  const double n = double(hi - lo);
  double sx = 0, sy = 0;
  for (std::size_t i = lo; i < hi; ++i) { sx += x[i]; sy += y[i]; }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  if (intercept) *intercept = my - slope * mx;
  return slope;
}

}  // namespace

SingularSpectrum singular_values(const Matrix& m) {
  require_nonempty_finite(m.rows(), m.cols(), m.allFinite());
  if (exactly_diagonal(m)) {
    RealVector d = m.diagonal().cwiseAbs();
    std::sort(d.data(), d.data() + d.size(), std::greater<double>());
    return from_sorted(std::move(d), "diagonal");
  }
  if (m.imag().isZero(0.0))  // exact zero imaginary part: real solver is cheaper
    return from_sorted(backend::svd_values(RealMatrix(m.real())), "real-svd");
  return from_sorted(backend::svd_values(m), "complex-svd");
}

SingularSpectrum singular_values(const RealMatrix& m) {
  require_nonempty_finite(m.rows(), m.cols(), m.allFinite());
  if (exactly_diagonal(m)) {
    RealVector d = m.diagonal().cwiseAbs();
    std::sort(d.data(), d.data() + d.size(), std::greater<double>());
    return from_sorted(std::move(d), "diagonal");
  }
  return from_sorted(backend::svd_values(m), "real-svd");
}

std::vector<Complex> complex_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("complex_eigenvalues: matrix not square");
  if (!m.allFinite())
    throw std::invalid_argument("complex_eigenvalues: non-finite entries");
  Vector w;
  if (m == m.adjoint()) {  // exact Hermitian: symmetric solvers are faster
    RealVector re = m.imag().isZero(0.0)
                        ? backend::symmetric_eigenvalues(RealMatrix(m.real()))
                        : backend::hermitian_eigenvalues(m);
    w = re.cast<Complex>();
  } else {
    w = backend::general_eigenvalues(m);
  }
  std::vector<Complex> out(w.data(), w.data() + w.size());
  std::sort(out.begin(), out.end(),
            [](Complex a, Complex b) { return std::abs(a) > std::abs(b); });
  return out;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols() || m != m.adjoint())
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  if (m.imag().isZero(0.0))
    return backend::symmetric_eigenvalues(RealMatrix(m.real()));
  return backend::hermitian_eigenvalues(m);
}

RealVector symmetric_eigenvalues(const RealMatrix& m) {
  if (m.rows() != m.cols() || m != m.transpose())
    throw std::invalid_argument("symmetric_eigenvalues: matrix not symmetric");
  return backend::symmetric_eigenvalues(m);
}

double schatten_norm(const SingularSpectrum& s, double p) {
  if (!(p > 0))
    throw std::invalid_argument("schatten_norm: need p > 0");
  double sum = 0;
  for (double v : s.values) sum += std::pow(v, p);
  return std::pow(sum, 1.0 / p);
}

InequalityCheck weyl_check(const std::vector<Complex>& eigenvalues,
                           const SingularSpectrum& s, double p) {
  if (!(p > 0)) throw std::invalid_argument("weyl_check: need p > 0");
  double lhs = 0, rhs = 0;
  for (Complex z : eigenvalues) lhs += std::pow(std::abs(z), p);
  for (double v : s.values) rhs += std::pow(v, p);
  return {lhs, rhs};
}

InequalityCheck fan_check(const SingularSpectrum& product,
                          const SingularSpectrum& b, const SingularSpectrum& c,
                          int k, int l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("fan_check: indices are 1-based");
  if (std::size_t(k + l - 1) > product.size() || std::size_t(k) > b.size() ||
      std::size_t(l) > c.size())
    throw std::invalid_argument("fan_check: index past end of spectrum");
  return {product[k + l - 2], b[k - 1] * c[l - 1]};
}

InequalityCheck product_norm_check(const SingularSpectrum& ab,
                                   const SingularSpectrum& a,
                                   const SingularSpectrum& b, double p,
                                   double q) {
  if (!(p > 0) || !(q > 0))
    throw std::invalid_argument("product_norm_check: need p, q > 0");
  const double r = 1.0 / (1.0 / p + 1.0 / q);
  const double lhs = schatten_norm(ab, r);
  const double rhs = std::pow(2.0, 1.0 / r) * schatten_norm(a, q) * schatten_norm(b, p);
  return {lhs, rhs};
}

void set_thread_cap(int threads) { backend::set_thread_cap(threads); }

TailFit fit_tail_exponent(const SingularSpectrum& s, int k_min) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("fit_tail_exponent: empty spectrum");
  const double floor = 1e-12 * s.values.front();
  std::size_t usable = n;
  while (usable > 0 && s.values[usable - 1] <= floor) --usable;
  if (usable < 4)
    throw std::runtime_error("fit_tail_exponent: fewer than 4 values above noise floor");

  std::size_t lo = k_min > 0 ? std::size_t(k_min)
                             : std::max<std::size_t>(8, usable / 40);
  if (usable < lo + 7)  // keep at least 8 points when the tail is short
    lo = usable > 8 ? usable - 7 : 2;
  if (lo < 1 || lo > usable)
    throw std::invalid_argument("fit_tail_exponent: window start past usable tail");

  std::vector<double> x, y;
  x.reserve(usable - lo + 1);
  for (std::size_t k = lo; k <= usable; ++k) {
    x.push_back(std::log(double(k)));
    y.push_back(std::log(s.values[k - 1]));
  }

  TailFit fit;
  fit.k_min = int(lo);
  fit.k_max = int(usable);
  const double slope = ols_slope(x, y, 0, x.size(), &fit.log_constant);
  fit.exponent = -slope;

  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.log_constant + slope * x[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / double(x.size()));

  // Super-polynomial decay shows up as a convex log-log plot: large residual
  // plus a tail slope visibly steeper than the head slope.
  if (x.size() >= 8) {
    const std::size_t half = x.size() / 2;
    const double s1 = ols_slope(x, y, 0, half);
    const double s2 = ols_slope(x, y, half, x.size());
    fit.super_polynomial = fit.residual > 0.1 && std::abs(s2) > 1.2 * std::abs(s1);
  } else {
    fit.super_polynomial = fit.residual > 0.3;
  }
  return fit;
}

}  // namespace schatten
