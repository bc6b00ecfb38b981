#pragma once

#include "ellshrink/types.hpp"

namespace ellshrink {

/// Closed-form second-moment quantities of the SCM under an elliptical
/// population with scale eta, sphericity gamma and elliptical kurtosis
/// kappa.
struct ScmMoments {
  double mse = 0.0;             // E||S - M||_F^2
  double nmse = 0.0;            // mse / ||M||_F^2
  double expected_tr_s2 = 0.0;  // E[tr(S^2)] = mse + p*eta2
};

/// Evaluate
///
///   MSE(S)  = (p/n) eta^2 { kappa (2 gamma + p) + gamma + p }
///   NMSE(S) = (1/gamma)(1/n) { kappa (2 gamma + p) + gamma + p }
///   E[tr(S^2)] = MSE(S) + p eta2,   eta2 = gamma eta^2
ScmMoments scm_moments(double eta, double gamma, double kappa, Eigen::Index n,
                       Eigen::Index p);

/// MSE of the optimally shrunk SCM: ||M - eta I||_F^2 (1 - beta_o)
///   = p (gamma - 1) eta^2 (1 - beta_o),  beta_o in [0, 1).
double optimal_mse(const CovarianceModel& model, double beta_o);

/// The same bound divided by ||M||_F^2:  (gamma - 1)(1 - beta_o)/gamma.
double optimal_nmse(const CovarianceModel& model, double beta_o);

/// Commutation matrix K_p: the p^2 x p^2 permutation with
/// K vec(A) = vec(A^T); symmetric and involutory.
Eigen::MatrixXd commutation_matrix(Eigen::Index p);

/// Covariance matrix of vec(S),
///
///   (1+kappa)/n (I + K_p)(M (x) M) + (kappa/n) vec(M) vec(M)^T.
///
/// Test oracle only; refuses p above the materialization guard.
Eigen::MatrixXd cov_vec_scm(const CovarianceModel& model, double kappa, Eigen::Index n);

inline constexpr Eigen::Index kCovVecScmMaxDim = 50;

}  // namespace ellshrink
