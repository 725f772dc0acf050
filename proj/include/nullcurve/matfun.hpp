#pragma once

#include "nullcurve/types.hpp"

namespace nullcurve {

/// Matrix exponential (scaling-and-squaring with Padé approximants).
Mat expm(const Mat& X);

/// Principal matrix logarithm. Throws LogBranchFailure if an eigenvalue lies
/// on the closed negative real axis (or at zero).
Mat logm_principal(const Mat& S);

/// Principal matrix square root, same branch restriction as logm_principal.
Mat sqrtm_principal(const Mat& S);

/// log / sqrt of a positive-definite Hermitian matrix via eigendecomposition.
/// Throws LogBranchFailure if the input is not Hermitian positive definite.
Mat logm_spd(const Mat& S, double herm_tol = 1e-10);
Mat sqrtm_spd(const Mat& S, double herm_tol = 1e-10);

/// ‖S − S†‖_F
double hermitian_residual(const Mat& S);

/// Inverse with an invertibility check; throws SingularGroupElement.
Mat safe_inverse(const Mat& S, double rcond_min = 1e-13);

} // namespace nullcurve
