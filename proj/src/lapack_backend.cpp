#include "lapack_backend.hpp"

#include <stdexcept>
#include <string>

// make the LAPACKE prototypes take std::complex directly (layout-identical)
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

extern "C" void openblas_set_num_threads(int);

namespace schatten::backend {

namespace {

[[noreturn]] void fail(const char* routine, int info) {
  throw std::runtime_error(std::string("lapack backend: ") + routine +
                           " returned info=" + std::to_string(info));
}

}  // namespace

RealVector svd_values(RealMatrix a) {
  const lapack_int m = a.rows(), n = a.cols();
  RealVector s(std::min(m, n));
  int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), m, s.data(),
                            nullptr, 1, nullptr, 1);
  if (info != 0) fail("dgesdd", info);
  return s;
}

RealVector svd_values(Matrix a) {
  const lapack_int m = a.rows(), n = a.cols();
  RealVector s(std::min(m, n));
  int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), m, s.data(),
                            nullptr, 1, nullptr, 1);
  if (info != 0) fail("zgesdd", info);
  return s;
}

RealVector symmetric_eigenvalues(RealMatrix a) {
  const lapack_int n = a.rows();
  RealVector w(n);
  int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  if (info != 0) fail("dsyevd", info);
  return w;
}

RealVector hermitian_eigenvalues(Matrix a) {
  const lapack_int n = a.rows();
  RealVector w(n);
  int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  if (info != 0) fail("zheevd", info);
  return w;
}

Vector general_eigenvalues(Matrix a) {
  const lapack_int n = a.rows();
  Vector w(n);
  int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, w.data(),
                           nullptr, 1, nullptr, 1);
  if (info != 0) fail("zgeev", info);
  return w;
}

void set_thread_cap(int n) {
  if (n > 0) openblas_set_num_threads(n);
}

}  // namespace schatten::backend
