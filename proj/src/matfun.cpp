#include "nullcurve/matfun.hpp"

#include "nullcurve/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace nullcurve {

Mat expm(const Mat& X) { return X.exp(); }

namespace {

void check_principal_branch(const Mat& S, const char* what) {
  Eigen::ComplexEigenSolver<Mat> es(S, /*computeEigenvectors=*/false);
  const double scale = S.norm();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Complex ev = es.eigenvalues()[i];
    if (std::abs(ev) < 1e-14 * (1.0 + scale))
      throw LogBranchFailure(std::string(what) + ": singular input");
    if (ev.real() < 0.0 && std::abs(ev.imag()) < 1e-12 * std::abs(ev))
      throw LogBranchFailure(std::string(what) + ": eigenvalue on the negative real axis");
  }
}

} // namespace

Mat logm_principal(const Mat& S) {
  check_principal_branch(S, "logm");
  return S.log();
}

Mat sqrtm_principal(const Mat& S) {
  check_principal_branch(S, "sqrtm");
  return S.sqrt();
}

namespace {

Mat spd_apply(const Mat& S, double herm_tol, double (*fn)(double), const char* what) {
  if (hermitian_residual(S) > herm_tol * (1.0 + S.norm()))
    throw LogBranchFailure(std::string(what) + ": input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(S);
  RVec lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 0.0)
      throw LogBranchFailure(std::string(what) + ": input not positive definite");
    lam[i] = fn(lam[i]);
  }
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

Mat logm_spd(const Mat& S, double herm_tol) {
  return spd_apply(S, herm_tol, [](double x) { return std::log(x); }, "logm_spd");
}

Mat sqrtm_spd(const Mat& S, double herm_tol) {
  return spd_apply(S, herm_tol, [](double x) { return std::sqrt(x); }, "sqrtm_spd");
}

double hermitian_residual(const Mat& S) { return (S - S.adjoint()).norm(); }

Mat safe_inverse(const Mat& S, double rcond_min) {
  Eigen::JacobiSVD<Mat> svd(S);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= rcond_min * sv(0))
    throw SingularGroupElement("matrix is numerically singular");
  return S.inverse();
}

} // namespace nullcurve
