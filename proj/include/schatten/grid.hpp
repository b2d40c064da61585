#pragma once
// Discretization grids: periodic tori (uniform rule, exact for band-limited
// kernels), finite integer boxes (counting measure), unions of real intervals
// (midpoint rule).  Points are stored lexicographically, first axis outermost.

#include <array>
#include <vector>

#include "schatten/types.hpp"

namespace schatten {

enum class GridKind { torus, lattice, intervals };

struct Grid {
  GridKind kind = GridKind::torus;
  int dimension = 1;  // 1 or 2
  Eigen::MatrixXd points;   // size() x dimension
  Eigen::VectorXd weights;  // quadrature weight per point
  int points_per_axis = 0;  // torus: N, lattice: 2R+1, intervals: per interval
  int radius = 0;           // lattice boxes only
  std::vector<std::array<double, 2>> intervals;  // interval grids only

  std::size_t size() const { return std::size_t(points.rows()); }
};

// N points 2*pi*i/N per axis, weight (2*pi/N)^d.
Grid torus_grid(int dimension, int points_per_axis);
// Integer sites -R..R per axis, unit weights.
Grid lattice_grid(int dimension, int radius);
// Disjoint increasing intervals, n midpoint cells each, weight = cell width.
Grid interval_grid(const std::vector<std::array<double, 2>>& intervals,
                   int points_per_interval);

// Integer frequency of DFT index j on an N-point torus axis:
// 0, 1, ..., ceil(N/2)-1, then -floor(N/2), ..., -1.
int torus_frequency(int j, int n);
std::vector<int> torus_frequencies(int n);

}  // namespace schatten
