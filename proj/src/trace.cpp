#include "schatten/trace.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace schatten {

namespace {

void require_square(const DiscretizedKernel& k, const char* who) {
  if (k.values.rows() != k.values.cols() ||
      k.row_grid.size() != std::size_t(k.values.rows()) ||
      k.col_grid.size() != std::size_t(k.values.cols()))
    throw std::invalid_argument(std::string(who) + ": kernel is not square on its grids");
}

// Split n indices into 2^level contiguous near-equal cells (leading cells get
// the remainder); returns the cell start offsets plus the end sentinel.
std::vector<Eigen::Index> cell_offsets(Eigen::Index n, int level) {
  const Eigen::Index cells = Eigen::Index(1) << level;
  if (cells > n)
    throw std::invalid_argument("dyadic_average: more cells than grid points");
  const Eigen::Index base = n / cells, extra = n % cells;
  std::vector<Eigen::Index> off(cells + 1);
  off[0] = 0;
  for (Eigen::Index c = 0; c < cells; ++c)
    off[c + 1] = off[c] + base + (c < extra ? 1 : 0);
  return off;
}

}  // namespace

Complex diagonal_trace(const DiscretizedKernel& k) {
  require_square(k, "diagonal_trace");
  Complex sum = 0;
  for (Eigen::Index i = 0; i < k.values.rows(); ++i)
    sum += k.row_grid.weights(i) * k.values(i, i);
  return sum;
}

DiscretizedKernel dyadic_average(const DiscretizedKernel& k, int level) {
  require_square(k, "dyadic_average");
  if (level < 0) throw std::invalid_argument("dyadic_average: negative level");
  if (k.row_grid.dimension != 1)
    throw std::invalid_argument("dyadic_average: only 1-d grids are supported");

  const auto off = cell_offsets(k.values.rows(), level);
  DiscretizedKernel out = k;
  for (std::size_t cr = 0; cr + 1 < off.size(); ++cr)
    for (std::size_t cc = 0; cc + 1 < off.size(); ++cc) {
      Complex num = 0;
      double den = 0;
      for (Eigen::Index i = off[cr]; i < off[cr + 1]; ++i)
        for (Eigen::Index j = off[cc]; j < off[cc + 1]; ++j) {
          const double w = k.row_grid.weights(i) * k.col_grid.weights(j);
          num += w * k.values(i, j);
          den += w;
        }
      const Complex avg = num / den;
      for (Eigen::Index i = off[cr]; i < off[cr + 1]; ++i)
        for (Eigen::Index j = off[cc]; j < off[cc + 1]; ++j)
          out.values(i, j) = avg;
    }
  return out;
}

Complex eigen_trace(const DiscretizedKernel& k) {
  require_square(k, "eigen_trace");
  const auto eigs = complex_eigenvalues(k.operator_matrix());
  // sum smallest-magnitude first so massive cancellations stay accurate
  Complex sum = 0;
  for (auto it = eigs.rbegin(); it != eigs.rend(); ++it) sum += *it;
  return sum;
}

TraceReport averaged_trace(const DiscretizedKernel& k, int max_level,
                           const DiscretizedKernel* reference) {
  require_square(k, "averaged_trace");
  if (max_level < 1)
    throw std::invalid_argument("averaged_trace: need at least one level");

  TraceReport rep;
  rep.diagonal = diagonal_trace(k);
  rep.eigen = eigen_trace(reference ? *reference : k);
  for (int j = 1; j <= max_level; ++j)
    rep.averaged.push_back(diagonal_trace(dyadic_average(k, j)));

  const double scale = std::max(std::abs(rep.eigen), 1e-12);
  const bool diagonal_off = std::abs(rep.diagonal - rep.eigen) > 0.01 * scale;
  const bool finest_close = std::abs(rep.averaged.back() - rep.eigen) <= 0.02 * scale;
  if (diagonal_off && finest_close) rep.flags.push_back("diagonal-pathology");
  if (max_level >= 2 &&
      std::abs(rep.averaged[max_level - 1] - rep.averaged[max_level - 2]) > 0.01 * scale)
    rep.flags.push_back("non-convergent-averaging");
  return rep;
}

}  // namespace schatten
