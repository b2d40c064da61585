#include "schatten/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schatten {

namespace {

void require_dimension(int d) {
  if (d != 1 && d != 2)
    throw std::invalid_argument("grid: dimension must be 1 or 2");
}

}  // namespace

Grid torus_grid(int dimension, int points_per_axis) {
  require_dimension(dimension);
  if (points_per_axis < 1)
    throw std::invalid_argument("torus_grid: need at least one point per axis");
  const int n = points_per_axis;
  const double step = 2.0 * std::numbers::pi / n;
  const std::size_t total = dimension == 1 ? n : std::size_t(n) * n;

  Grid g;
  g.kind = GridKind::torus;
  g.dimension = dimension;
  g.points_per_axis = n;
  g.points.resize(total, dimension);
  g.weights = Eigen::VectorXd::Constant(total, std::pow(step, dimension));
  if (dimension == 1) {
    for (int i = 0; i < n; ++i) g.points(i, 0) = step * i;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        g.points(std::size_t(i) * n + j, 0) = step * i;
        g.points(std::size_t(i) * n + j, 1) = step * j;
      }
  }
  return g;
}

Grid lattice_grid(int dimension, int radius) {
  require_dimension(dimension);
  if (radius < 0) throw std::invalid_argument("lattice_grid: negative radius");
  const int n = 2 * radius + 1;
  const std::size_t total = dimension == 1 ? n : std::size_t(n) * n;

  Grid g;
  g.kind = GridKind::lattice;
  g.dimension = dimension;
  g.points_per_axis = n;
  g.radius = radius;
  g.points.resize(total, dimension);
  g.weights = Eigen::VectorXd::Ones(total);
  if (dimension == 1) {
    for (int i = 0; i < n; ++i) g.points(i, 0) = i - radius;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        g.points(std::size_t(i) * n + j, 0) = i - radius;
        g.points(std::size_t(i) * n + j, 1) = j - radius;
      }
  }
  return g;
}

Grid interval_grid(const std::vector<std::array<double, 2>>& intervals,
                   int points_per_interval) {
  if (intervals.empty())
    throw std::invalid_argument("interval_grid: no intervals");
  if (points_per_interval < 1)
    throw std::invalid_argument("interval_grid: need at least one point");
  for (std::size_t m = 0; m < intervals.size(); ++m) {
    if (!(intervals[m][0] < intervals[m][1]))
      throw std::invalid_argument("interval_grid: interval endpoints not increasing");
    if (m > 0 && !(intervals[m - 1][1] <= intervals[m][0]))
      throw std::invalid_argument("interval_grid: intervals overlap or are unordered");
  }

  const int n = points_per_interval;
  Grid g;
  g.kind = GridKind::intervals;
  g.dimension = 1;
  g.points_per_axis = n;
  g.intervals = intervals;
  g.points.resize(intervals.size() * n, 1);
  g.weights.resize(intervals.size() * n);
  std::size_t row = 0;
  for (const auto& iv : intervals) {
    const double h = (iv[1] - iv[0]) / n;
    for (int i = 0; i < n; ++i, ++row) {
      g.points(row, 0) = iv[0] + (i + 0.5) * h;  // midpoint rule
      g.weights(row) = h;
    }
  }
  return g;
}

int torus_frequency(int j, int n) {
  if (j < 0 || j >= n) throw std::invalid_argument("torus_frequency: index out of range");
  return j < (n + 1) / 2 ? j : j - n;
}

std::vector<int> torus_frequencies(int n) {
  std::vector<int> f(n);
  for (int j = 0; j < n; ++j) f[j] = torus_frequency(j, n);
  return f;
}

}  // namespace schatten
