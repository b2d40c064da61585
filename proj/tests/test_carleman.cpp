#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "schatten/carleman.hpp"

using namespace schatten;

TEST_CASE("sign sequence obeys the doubling recurrences") {
  // eps_{2j} = eps_j (a trailing 0 adds no adjacent 11), and
  // eps_{2j+1} = eps_j * (-1)^{j mod 2} (a trailing 1 pairs with j's low bit).
  const auto eps = rudin_shapiro(512);
  CHECK(eps[0] == 1);
  for (int j = 0; j < 256; ++j) {
    CHECK(eps[2 * j] == eps[j]);
    CHECK(eps[2 * j + 1] == eps[j] * ((j % 2 == 0) ? 1 : -1));
  }
}

TEST_CASE("coefficient blocks sit where they should with the right amplitude") {
  const CoefficientSequence c = carleman_coefficients(4);
  CHECK(c.max_frequency() == 31);
  CHECK(std::abs(c.coefficients[0]) == 0.0);
  CHECK(std::abs(c.coefficients[1]) == 0.0);
  // block 1 amplitude 2^{-1/2}, block 3 amplitude 2^{-3/2}/9
  CHECK(std::abs(c.coefficients[2]) == doctest::Approx(std::pow(2.0, -0.5)));
  CHECK(std::abs(c.coefficients[8]) ==
        doctest::Approx(std::pow(2.0, -1.5) / 9.0));

  for (int b = 1; b <= 4; ++b) {
    double direct =  0;
    for (int j = 1 << b; j < (1 << (b + 1)); ++j)
      direct += std::pow(std::abs(c.coefficients[j]), 1.9);
    CHECK(direct == doctest::Approx(block_power_sum(b, 1.9)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(carleman_coefficients(0), std::invalid_argument);
  CHECK_THROWS_AS(carleman_coefficients(21), std::invalid_argument);
}

TEST_CASE("single block stays flat: sup bounded by sqrt(2)/n^2") {
  // |P|^2 + |Q|^2 = 2^{n+1} for the paired sign polynomials forces
  // |P| <= sqrt(2) 2^{n/2}; with amplitude 2^{-n/2} n^{-2} that is sqrt(2)/n^2.
  for (int n : {3, 5, 7}) {
    CoefficientSequence block = carleman_coefficients(n);
    for (int j = 0; j < (1 << n); ++j) block.coefficients[j] = 0.0;
    const double sup = sup_norm_estimate(block, 8);
    CHECK(sup <= std::sqrt(2.0) / double(n * n) * (1.0 + 1e-9));
    CHECK(sup > 0.0);
  }
}

TEST_CASE("fft evaluation agrees with a naive fourier sum") {
  const CoefficientSequence c = carleman_coefficients(2);  // 8 coefficients
  const double fast = sup_norm_estimate(c, 4);

  // same grid the estimator uses: next power of two >= 4 * 8
  const std::size_t m = 32;
  double naive = 0;
  for (std::size_t t = 0; t < m; ++t) {
    Complex v = 0;
    for (std::size_t k = 0; k < c.coefficients.size(); ++k)
      v += c.coefficients[k] *
           std::polar(1.0, 2.0 * std::numbers::pi * double(k) * double(t) / double(m));
    naive = std::max(naive, std::abs(v));
  }
  CHECK(fast == doctest::Approx(naive).epsilon(1e-12));
}

TEST_CASE("finer evaluation grids only raise the sup estimate") {
  const CoefficientSequence c = carleman_coefficients(5);
  const double coarse = sup_norm_estimate(c, 2);
  const double fine = sup_norm_estimate(c, 4);  // nested grid, superset of points
  CHECK(fine >= coarse * (1.0 - 1e-12));
  CHECK(fine <= coarse * 1.25);  // and the coarse grid was already decent
}

TEST_CASE("partial sums stay uniformly bounded well under the ceiling") {
  const double sup = sup_norm_estimate(carleman_coefficients(6), 4);
  CHECK(sup < 2.4);
}

TEST_CASE("operator construction respects the mode cap and the l2 identity") {
  const CoefficientSequence c = carleman_coefficients(5);  // frequencies to 63

  const CarlemanOperator uncapped = carleman_operator(c, 63);
  CHECK_FALSE(uncapped.capped);
  CHECK(uncapped.retained_max_frequency == 63);
  CHECK(uncapped.kernel.values.rows() == 127);
  CHECK(uncapped.exact[0] == doctest::Approx(std::pow(2.0, -0.5)));

  const CarlemanOperator capped = carleman_operator(c, 31);
  CHECK(capped.capped);
  CHECK(capped.retained_max_frequency == 31);
  CHECK(capped.kernel.values.rows() == 63);

  double l2 = 0;
  for (int k = 0; k <= 31; ++k) l2 += std::norm(c.coefficients[k]);
  l2 = std::sqrt(l2);
  CHECK(hilbert_schmidt_norm(capped.kernel) == doctest::Approx(l2).epsilon(1e-10));

  // SVD of the small capped operator reproduces the retained moduli
  const SingularSpectrum s = singular_values(capped.kernel.operator_matrix());
  for (std::size_t k = 0; k < s.size(); ++k)
    CHECK(std::abs(s[k] - capped.exact[k]) < 1e-12);
}
