#pragma once

#include "ellshrink/types.hpp"

namespace ellshrink {

/// Sample covariance matrix S = (1/n) sum_i x_i x_i^T (zero-mean
/// convention, no centering).
Eigen::MatrixXd scm(const DataMatrix& x);

/// Sample sign covariance matrix S_sgn = (1/n) sum_i x_i x_i^T / |x_i|^2.
/// Has tr(S_sgn) = 1; throws ZeroNormRow on a row of zeros.
Eigen::MatrixXd sign_scm(const DataMatrix& x);

/// Sphericity estimate from the sign SCM:
///
///   gamma_hat = p tr(S_sgn^2) - p/n
///
/// Consistent for gamma = p tr(M^2)/tr(M)^2 in the large-(n,p) regime.
/// Returned unclamped; finite samples can fall below 1 (or below 0).
double gamma_hat_sign(const DataMatrix& x);

/// Clamped average of per-column sample kurtoses:
///
///   kappa_hat = max(-2/(p+2), (1/(3p)) sum_j (m4_j/m2_j^2 - 3))
///
/// with raw (uncentered) moments m_q = (1/n) sum_i x_ij^q.
double kappa_hat(const DataMatrix& x);

/// tr(S)/p and tr(S^2)/p of a square matrix.
double eta_hat(const Eigen::MatrixXd& s);
double eta2_hat(const Eigen::MatrixXd& s);

/// All four sample statistics of one data matrix (sign-SCM gamma).
SphericityStats sphericity_stats(const DataMatrix& x);

/// Plug-in sphericity eta2_hat/eta_hat^2 computed from the plain SCM.
double gamma_hat_plugin(const Eigen::MatrixXd& s);

}  // namespace ellshrink
