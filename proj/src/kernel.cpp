#include "schatten/kernel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace schatten {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_grid_match(const Grid& g, std::size_t n, const char* what) {
  if (g.size() != n)
    throw std::invalid_argument(std::string(what) + ": grid size does not match values");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_grid_line(std::ostream& os, const char* tag, const Grid& g) {
  os << tag << ' ';
  switch (g.kind) {
    case GridKind::torus:
      os << "torus " << g.dimension << ' ' << g.points_per_axis;
      break;
    case GridKind::lattice:
      os << "lattice " << g.dimension << ' ' << g.radius;
      break;
    case GridKind::intervals:
      os << "intervals " << g.points_per_axis << ' ' << g.intervals.size();
      for (const auto& iv : g.intervals)
        os << ' ' << format_double(iv[0]) << ' ' << format_double(iv[1]);
      break;
  }
  os << '\n';
}

Grid read_grid_line(std::istream& is, const char* tag) {
  std::string seen, kind;
  is >> seen >> kind;
  if (seen != tag)
    throw std::runtime_error(std::string("kernel file: expected '") + tag +
                             "' section, got '" + seen + "'");
  if (kind == "torus") {
    int dim, n;
    is >> dim >> n;
    return torus_grid(dim, n);
  }
  if (kind == "lattice") {
    int dim, r;
    is >> dim >> r;
    return lattice_grid(dim, r);
  }
  if (kind == "intervals") {
    int per;
    std::size_t count;
    is >> per >> count;
    std::vector<std::array<double, 2>> ivs(count);
    for (auto& iv : ivs) is >> iv[0] >> iv[1];
    return interval_grid(ivs, per);
  }
  throw std::runtime_error("kernel file: unknown grid kind '" + kind + "'");
}

}  // namespace

Matrix DiscretizedKernel::operator_matrix() const {
  check_grid_match(row_grid, std::size_t(values.rows()), "operator_matrix");
  check_grid_match(col_grid, std::size_t(values.cols()), "operator_matrix");
  const RealVector sr = row_grid.weights.cwiseSqrt();
  const RealVector sc = col_grid.weights.cwiseSqrt();
  return sr.asDiagonal() * values * sc.asDiagonal();
}

DiscretizedKernel build_kernel(Grid row_grid, Grid col_grid, const KernelFunction& f) {
  if (!f) throw std::invalid_argument("build_kernel: null kernel function");
  DiscretizedKernel k;
  k.values.resize(row_grid.size(), col_grid.size());
  for (Eigen::Index j = 0; j < k.values.cols(); ++j) {
    const Eigen::RowVectorXd y = col_grid.points.row(j);
    for (Eigen::Index i = 0; i < k.values.rows(); ++i)
      k.values(i, j) = f(row_grid.points.row(i), y);
  }
  if (!k.values.allFinite())
    throw std::runtime_error("build_kernel: kernel function produced non-finite values");
  k.row_grid = std::move(row_grid);
  k.col_grid = std::move(col_grid);
  return k;
}

DiscretizedKernel build_torus_kernel(int dimension, int points_per_axis,
                                     const KernelFunction& f) {
  Grid g = torus_grid(dimension, points_per_axis);
  return build_kernel(g, g, f);
}

DiscretizedKernel build_lattice_kernel(int dimension, int radius,
                                       const KernelFunction& f) {
  Grid g = lattice_grid(dimension, radius);
  return build_kernel(g, g, f);
}

DiscretizedKernel build_interval_kernel(
    const std::vector<std::array<double, 2>>& intervals, int points_per_interval,
    const KernelFunction& f) {
  Grid g = interval_grid(intervals, points_per_interval);
  return build_kernel(g, g, f);
}

ConvolutionKernel build_convolution_kernel(int max_frequency, const Vector& c) {
  const int n = max_frequency;
  if (n < 0) throw std::invalid_argument("build_convolution_kernel: negative max frequency");
  const int m = 2 * n + 1;
  if (c.size() != m)
    throw std::invalid_argument(
        "build_convolution_kernel: coefficient vector must have 2N+1 entries");
  if (!c.allFinite())
    throw std::invalid_argument("build_convolution_kernel: non-finite coefficients");

  // K is circulant; evaluate one period g[t] = (1/2pi) sum_k c_k e^{ik t 2pi/m}
  // with a running phase product, resynchronized every 128 steps to keep the
  // accumulated rounding well under the exactness tolerance.
  Vector g(m);
  for (int t = 0; t < m; ++t) {
    const double theta = two_pi * t / m;
    const Complex step = std::polar(1.0, theta);
    Complex phase = std::polar(1.0, -double(n) * theta);
    Complex sum = 0;
    for (int j = 0; j < m; ++j) {
      if (j % 128 == 0) phase = std::polar(1.0, (j - n) * theta);
      sum += c[j] * phase;
      phase *= step;
    }
    g[t] = sum / two_pi;
  }

  ConvolutionKernel out;
  out.kernel.row_grid = torus_grid(1, m);
  out.kernel.col_grid = out.kernel.row_grid;
  out.kernel.values.resize(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      out.kernel.values(i, j) = g[(i - j + m) % m];

  out.exact.values.resize(m);
  for (int j = 0; j < m; ++j) out.exact.values[j] = std::abs(c[j]);
  std::sort(out.exact.values.begin(), out.exact.values.end(), std::greater<double>());
  out.exact.source = "convolution-coefficients";
  return out;
}

double riesz_constant(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("riesz_constant: need 0 < alpha < 1");
  return std::pow(2.0, alpha - 1.0) / std::sqrt(std::numbers::pi) *
         std::tgamma(alpha / 2.0) / std::tgamma((1.0 - alpha) / 2.0);
}

DiscretizedKernel build_riesz_kernel(const Grid& g, double alpha) {
  if (g.kind != GridKind::intervals)
    throw std::invalid_argument("build_riesz_kernel: needs an interval grid");
  const double c = riesz_constant(alpha);
  const std::size_t n = g.size();

  DiscretizedKernel k;
  k.row_grid = g;
  k.col_grid = g;
  k.values.resize(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double y = g.points(j, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) {
        // cell average of c |x - y|^{alpha-1} over the midpoint cell:
        // (2/h) * int_0^{h/2} u^{alpha-1} du = (h/2)^{alpha-1} / alpha
        const double h = g.weights(i);
        k.values(i, j) = c * std::pow(h / 2.0, alpha - 1.0) / alpha;
      } else {
        k.values(i, j) = c * std::pow(std::abs(g.points(i, 0) - y), alpha - 1.0);
      }
    }
  }
  return k;
}

double hilbert_schmidt_norm(const DiscretizedKernel& k) {
  return k.operator_matrix().norm();
}

double mixed_norm(const DiscretizedKernel& k, double p, double q) {
  if (!(p >= 1.0) || !(q >= 1.0))
    throw std::invalid_argument("mixed_norm: exponents must be >= 1");
  check_grid_match(k.row_grid, std::size_t(k.values.rows()), "mixed_norm");
  check_grid_match(k.col_grid, std::size_t(k.values.cols()), "mixed_norm");
  double outer = 0;
  for (Eigen::Index j = 0; j < k.values.cols(); ++j) {
    double inner = 0;
    for (Eigen::Index i = 0; i < k.values.rows(); ++i)
      inner += k.row_grid.weights(i) * std::pow(std::abs(k.values(i, j)), p);
    outer += k.col_grid.weights(j) * std::pow(inner, q / p);
  }
  return std::pow(outer, 1.0 / q);
}

DiscretizedKernel adjoint_kernel(const DiscretizedKernel& k) {
  DiscretizedKernel a;
  a.row_grid = k.col_grid;
  a.col_grid = k.row_grid;
  a.values = k.values.adjoint();
  return a;
}

void save_kernel(const DiscretizedKernel& k, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_kernel: cannot open '" + path + "'");
  os << "schatten-kernel 1\n";
  write_grid_line(os, "rows", k.row_grid);
  write_grid_line(os, "cols", k.col_grid);
  os << "values " << k.values.rows() << ' ' << k.values.cols() << '\n';
  for (Eigen::Index i = 0; i < k.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.values.cols(); ++j) {
      if (j) os << ' ';
      os << format_double(k.values(i, j).real()) << ' '
         << format_double(k.values(i, j).imag());
    }
    os << '\n';
  }
  if (!os) throw std::runtime_error("save_kernel: write failed for '" + path + "'");
}

DiscretizedKernel load_kernel(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_kernel: cannot open '" + path + "'");
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "schatten-kernel" || version != 1)
    throw std::runtime_error("load_kernel: '" + path + "' is not a kernel file");

  DiscretizedKernel k;
  k.row_grid = read_grid_line(is, "rows");
  k.col_grid = read_grid_line(is, "cols");
  std::string tag;
  Eigen::Index rows = 0, cols = 0;
  is >> tag >> rows >> cols;
  if (tag != "values" || rows < 0 || cols < 0)
    throw std::runtime_error("load_kernel: malformed values header");
  if (std::size_t(rows) != k.row_grid.size() || std::size_t(cols) != k.col_grid.size())
    throw std::runtime_error("load_kernel: value block does not match grids");
  k.values.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      double re, im;
      if (!(is >> re >> im))
        throw std::runtime_error("load_kernel: truncated value block");
      k.values(i, j) = Complex(re, im);
    }
  return k;
}

}  // namespace schatten
