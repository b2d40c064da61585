#pragma once

#include <Eigen/Dense>
#include <complex>

namespace schatten {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;      // dense complex, column-major
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

}  // namespace schatten
