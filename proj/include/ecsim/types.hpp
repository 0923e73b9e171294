#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ecsim {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

// Default probability mass allowed beyond a Fock truncation.
inline constexpr double kDefaultLeakTol = 1e-10;

}  // namespace ecsim
