#pragma once

#include <Eigen/Dense>
#include <complex>

namespace nullcurve {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

} // namespace nullcurve
