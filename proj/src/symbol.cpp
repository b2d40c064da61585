#include "schatten/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace schatten {

namespace {

// Unitary DFT on one torus axis in the lab's frequency ordering:
// U(f, t) = exp(-i xi_f theta_t) / sqrt(n).
Matrix dft_matrix(int n) {
  Matrix u(n, n);
  const double step = 2.0 * std::numbers::pi / n;
  const double scale = 1.0 / std::sqrt(double(n));
  const auto freqs = torus_frequencies(n);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < n; ++f)
      u(f, t) = std::polar(scale, -freqs[f] * step * t);
  return u;
}

RealMatrix dirichlet_laplacian(double box, int n, RealVector* points) {
  if (n < 2) throw std::invalid_argument("oscillator: need at least 2 grid points");
  if (!(box > 0)) throw std::invalid_argument("oscillator: box size must be positive");
  const double h = 2.0 * box / (n + 1);
  RealMatrix d2 = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    d2(i, i) = 2.0 / (h * h);
    if (i + 1 < n) {
      d2(i, i + 1) = -1.0 / (h * h);
      d2(i + 1, i) = -1.0 / (h * h);
    }
  }
  if (points) {
    points->resize(n);
    for (int i = 0; i < n; ++i) (*points)(i) = -box + (i + 1) * h;
  }
  return d2;
}

// Box truncation and grid error corrupt the top of a discretized spectrum;
// keep levels whose eigenvalue stays well under the wall height, and never
// more than a quarter of the grid modes.
int trusted_levels(const RealVector& ascending, int n, double wall_height) {
  const double cutoff = wall_height / 3.0;
  int count = 0;
  while (count < ascending.size() && ascending(count) <= cutoff) ++count;
  return std::min(count, n / 4);
}

// E K on the row variable of a torus kernel: conjugate each column with the
// 1-d or 2-d unitary DFT and scale the modes.
Matrix fourier_apply_rows(const RealVector& e, const Grid& g, const Matrix& v) {
  const int n = g.points_per_axis;
  if (g.dimension == 1) {
    Matrix w = dft_matrix(n) * v;
    w.array().colwise() *= e.array().cast<Complex>();
    return dft_matrix(n).adjoint() * w;
  }
  // dimension 2: flat row index i1*n+i2 maps to the (i2, i1) entry of an
  // n x n column-major block, so a full transform is U * block * U^T.
  const Matrix u = dft_matrix(n);
  Matrix out(v.rows(), v.cols());
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Map<const Matrix> vm(v.col(c).data(), n, n);
    Matrix wm = u * vm * u.transpose();
    for (Eigen::Index f = 0; f < v.rows(); ++f)  // flat storage = mode order
      wm.data()[f] *= e(f);
    Matrix zm = u.adjoint() * wm * u.conjugate();
    out.col(c) = Eigen::Map<const Matrix>(zm.data(), v.rows(), 1);
  }
  return out;
}

}  // namespace

DiagonalSymbol lattice_weight_symbol(const Grid& g, double alpha) {
  if (g.kind != GridKind::lattice)
    throw std::invalid_argument("lattice_weight_symbol: needs a lattice grid");
  DiagonalSymbol e;
  e.basis = SymbolBasis::lattice_site;
  e.eigenvalues.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    e.eigenvalues(i) = std::pow(1.0 + g.points.row(i).norm(), alpha);
  e.trusted_count = int(g.size());
  e.label = "lattice-weight alpha=" + std::to_string(alpha);
  return e;
}

DiagonalSymbol fourier_weight_symbol(const Grid& g, double mu) {
  if (g.kind != GridKind::torus)
    throw std::invalid_argument("fourier_weight_symbol: needs a torus grid");
  const int n = g.points_per_axis;
  const auto freqs = torus_frequencies(n);
  DiagonalSymbol e;
  e.basis = SymbolBasis::fourier_mode;
  e.eigenvalues.resize(g.size());
  if (g.dimension == 1) {
    for (int j = 0; j < n; ++j)
      e.eigenvalues(j) = std::pow(1.0 + double(freqs[j]) * freqs[j], mu / 2.0);
  } else {
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2) {
        const double k2 = double(freqs[j1]) * freqs[j1] + double(freqs[j2]) * freqs[j2];
        e.eigenvalues(std::size_t(j1) * n + j2) = std::pow(1.0 + k2, mu / 2.0);
      }
  }
  e.trusted_count = int(g.size());
  e.label = "fourier-weight mu=" + std::to_string(mu);
  return e;
}

DiagonalSymbol discretize_oscillator(double a, double box, int n) {
  if (!(a > 0)) throw std::invalid_argument("discretize_oscillator: need a > 0");
  RealVector x;
  RealMatrix h = dirichlet_laplacian(box, n, &x);
  for (int i = 0; i < n; ++i) h(i, i) += std::pow(std::abs(x(i)), a);

  DiagonalSymbol e;
  e.basis = SymbolBasis::oscillator;
  e.eigenvalues = symmetric_eigenvalues(h);
  e.trusted_count = trusted_levels(e.eigenvalues, n, std::pow(box, a));
  e.label = "oscillator |x|^" + std::to_string(a);
  return e;
}

DiagonalSymbol discretize_poly_oscillator(int k, int l, double box, int n) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("discretize_poly_oscillator: need k, l >= 1");
  RealVector x;
  const RealMatrix d2 = dirichlet_laplacian(box, n, &x);
  RealMatrix h = d2;
  for (int i = 1; i < k; ++i) h = h * d2;
  for (int i = 0; i < n; ++i) h(i, i) += std::pow(std::abs(x(i)), 2.0 * l);

  DiagonalSymbol e;
  e.basis = SymbolBasis::oscillator;
  e.eigenvalues = symmetric_eigenvalues(h);
  e.trusted_count = trusted_levels(e.eigenvalues, n, std::pow(box, 2.0 * l));
  e.label = "poly-oscillator k=" + std::to_string(k) + " l=" + std::to_string(l);
  return e;
}

DiscretizedKernel apply_symbol(const DiagonalSymbol& e, const DiscretizedKernel& k,
                               char axis) {
  if (axis != 'x' && axis != 'y')
    throw std::invalid_argument("apply_symbol: axis must be 'x' or 'y'");
  if (e.basis == SymbolBasis::oscillator)
    throw std::invalid_argument(
        "apply_symbol: oscillator symbols have no site representation");

  const Grid& g = axis == 'x' ? k.row_grid : k.col_grid;
  if (std::size_t(e.eigenvalues.size()) != g.size())
    throw std::invalid_argument("apply_symbol: symbol size does not match grid");

  DiscretizedKernel out = k;
  if (e.basis == SymbolBasis::lattice_site) {
    if (g.kind != GridKind::lattice)
      throw std::invalid_argument("apply_symbol: site symbol needs a lattice grid");
    if (axis == 'x')
      out.values = e.eigenvalues.cast<Complex>().asDiagonal() * k.values;
    else
      out.values = k.values * e.eigenvalues.cast<Complex>().asDiagonal();
    return out;
  }

  // fourier_mode
  if (g.kind != GridKind::torus)
    throw std::invalid_argument("apply_symbol: fourier symbol needs a torus grid");
  if (axis == 'x') {
    out.values = fourier_apply_rows(e.eigenvalues, g, k.values);
  } else {
    // K E on the column variable equals (E' K^T)^T with a plain transpose:
    // the multiplier matrix is symmetric for a real mode function.
    out.values = fourier_apply_rows(e.eigenvalues, g, k.values.transpose()).transpose();
  }
  return out;
}

CountingFit fit_counting(const DiagonalSymbol& e, double lambda_max) {
  const int trusted = std::min<int>(e.trusted_count, int(e.eigenvalues.size()));
  std::vector<double> lam;
  lam.reserve(trusted);
  {
    RealVector sorted = e.eigenvalues;
    std::sort(sorted.data(), sorted.data() + sorted.size());
    for (int j = 0; j < trusted; ++j)
      if (sorted(j) <= lambda_max) lam.push_back(sorted(j));
  }
  const std::size_t t = lam.size();
  if (t < 50)
    throw std::invalid_argument(
        "fit_counting: needs at least 50 trusted eigenvalues in range, got " +
        std::to_string(t));
  for (double v : lam)
    if (!(1.0 + v > 0))
      throw std::invalid_argument("fit_counting: eigenvalues must exceed -1");

  const std::size_t j_min = std::max<std::size_t>(8, t / 40);
  double sx = 0, sy = 0, n = double(t - j_min + 1);
  std::vector<double> xs, ys;
  for (std::size_t j = j_min; j <= t; ++j) {
    xs.push_back(std::log1p(lam[j - 1]));
    ys.push_back(std::log(double(j)));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) { sx += xs[i]; sy += ys[i]; }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 1e-12))
    throw std::runtime_error("fit_counting: degenerate eigenvalue range");

  CountingFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.lambda_min = lam[j_min - 1];
  fit.lambda_max = lam[t - 1];

  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + fit.exponent * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);

  // Inflate the constant until N(lambda_j) <= C (1+lambda_j)^p holds at every
  // fitted point, so the reported pair is a certificate, not just a trend.
  double c = 1.05 * std::exp(intercept);
  for (std::size_t j = j_min; j <= t; ++j)
    c = std::max(c, double(j) / std::pow(1.0 + lam[j - 1], fit.exponent));
  fit.constant = c;
  return fit;
}

double inverse_schatten_threshold(const DiagonalSymbol& e) {
  return fit_counting(e, std::numeric_limits<double>::infinity()).exponent;
}

std::vector<SobolevInclusionCheck> sobolev_inclusion_check(
    int points_per_axis, const std::vector<std::array<double, 2>>& order_pairs) {
  if (points_per_axis < 2)
    throw std::invalid_argument("sobolev_inclusion_check: grid too small");
  const int n = points_per_axis;
  const int lo = -n / 2, hi = lo + n;

  std::vector<SobolevInclusionCheck> out;
  for (const auto& pair : order_pairs) {
    SobolevInclusionCheck chk;
    chk.mu1 = pair[0];
    chk.mu2 = pair[1];
    if (!(chk.mu1 > 0) || !(chk.mu2 > 0))
      throw std::invalid_argument("sobolev_inclusion_check: orders must be positive");
    const double m = std::min(chk.mu1, chk.mu2);
    for (int xi = lo; xi < hi; ++xi)
      for (int eta = lo; eta < hi; ++eta) {
        const double fx = 1.0 + double(xi) * xi;
        const double fy = 1.0 + double(eta) * eta;
        const double w_prod = std::pow(fx, chk.mu1 / 2) * std::pow(fy, chk.mu2 / 2);
        const double w_iter = std::pow(fx * fy, m / 2);
        const double w_joint =
            std::pow(1.0 + double(xi) * xi + double(eta) * eta, m / 2);
        chk.max_joint_over_iterated =
            std::max(chk.max_joint_over_iterated, w_joint / w_iter);
        chk.max_iterated_over_product =
            std::max(chk.max_iterated_over_product, w_iter / w_prod);
      }
    out.push_back(chk);
  }
  return out;
}

}  // namespace schatten
