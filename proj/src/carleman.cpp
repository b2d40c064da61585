#include "schatten/carleman.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schatten {

namespace {

// Iterative radix-2 FFT, sign +1 in the exponent (synthesis direction),
// no normalization.  Length must be a power of two.
void fft_pow2(std::vector<Complex>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {  // bit reversal permutation
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / double(len);
    const Complex wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      Complex w = 1.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace

std::vector<int> rudin_shapiro(int length) {
  if (length < 0) throw std::invalid_argument("rudin_shapiro: negative length");
  std::vector<int> eps(length);
  for (int j = 0; j < length; ++j) {
    const unsigned pairs = std::popcount(unsigned(j) & (unsigned(j) >> 1));
    eps[j] = (pairs & 1u) ? -1 : 1;
  }
  return eps;
}

CoefficientSequence carleman_coefficients(int blocks) {
  if (blocks < 1 || blocks > 20)  // 2^21 coefficients at the top end
    throw std::invalid_argument("carleman_coefficients: blocks must be in 1..20");
  CoefficientSequence c;
  c.blocks = blocks;
  c.coefficients.assign(std::size_t(1) << (blocks + 1), 0.0);
  const auto eps = rudin_shapiro(1 << blocks);
  for (int n = 1; n <= blocks; ++n) {
    const double amp = std::pow(2.0, -0.5 * n) / (double(n) * n);
    const int base = 1 << n;
    for (int j = 0; j < base; ++j)
      c.coefficients[std::size_t(base) + j] = amp * eps[j];
  }
  return c;
}

double block_power_sum(int block, double p) {
  if (block < 1) throw std::invalid_argument("block_power_sum: blocks start at 1");
  if (!(p > 0)) throw std::invalid_argument("block_power_sum: need p > 0");
  return std::pow(2.0, block * (1.0 - p / 2.0)) * std::pow(double(block), -2.0 * p);
}

double sup_norm_estimate(const CoefficientSequence& c, int oversample) {
  if (oversample < 1) throw std::invalid_argument("sup_norm_estimate: oversample >= 1");
  const std::size_t need = std::size_t(oversample) * (c.coefficients.size());
  std::size_t m = 1;
  while (m < need) m <<= 1;

  std::vector<Complex> values(m, 0.0);
  for (std::size_t k = 0; k < c.coefficients.size(); ++k)
    values[k] = c.coefficients[k];
  fft_pow2(values);  // values[t] = sum_k c_k e^{2 pi i k t / m}
  double sup = 0;
  for (const Complex& v : values) sup = std::max(sup, std::abs(v));
  return sup;
}

CarlemanOperator carleman_operator(const CoefficientSequence& c, int mode_cap) {
  if (mode_cap < 1) throw std::invalid_argument("carleman_operator: mode cap too small");
  CarlemanOperator out;
  out.mode_cap = mode_cap;
  const int full = c.max_frequency();
  const int fmax = std::min(full, mode_cap);
  out.capped = full > mode_cap;
  out.retained_max_frequency = fmax;

  // symmetric coefficient vector for the convolution builder (nothing below 0)
  Vector two_sided = Vector::Zero(2 * fmax + 1);
  for (int k = 0; k <= fmax; ++k)
    two_sided[fmax + k] = c.coefficients[std::size_t(k)];
  ConvolutionKernel conv = build_convolution_kernel(fmax, two_sided);
  out.kernel = std::move(conv.kernel);
  out.exact = std::move(conv.exact);
  out.exact.source = "carleman-coefficients";
  return out;
}

}  // namespace schatten
