#pragma once

#include <utility>

#include "ellshrink/types.hpp"

namespace ellshrink {

/// Regularized SCM assembly: beta*S + alpha*I.
Eigen::MatrixXd rscm(const Eigen::MatrixXd& s, const ShrinkageParams& params);

/// Oracle shrinkage parameters for an arbitrary sampling distribution
/// with finite 4th-order moments:
///
///   beta_o = p (gamma-1) eta^2 / (E[tr(S^2)] - p eta^2)
///   alpha_o = (1 - beta_o) eta
///
/// The scalar overload carries the identical algebra for callers that
/// have (eta, gamma, p) without a realizable covariance matrix.
ShrinkageParams oracle_params_general(const CovarianceModel& model, double expected_tr_s2);
ShrinkageParams oracle_params_general(double eta, double gamma, Eigen::Index p,
                                      double expected_tr_s2);

/// Oracle shrinkage parameters under an elliptical population:
///
///   beta_o = (gamma-1) / ( (gamma-1) + (1/n){ kappa(2 gamma + p) + gamma + p } )
///   alpha_o = (1 - beta_o) eta
ShrinkageParams oracle_params_elliptical(const CovarianceModel& model, double kappa,
                                         Eigen::Index n);
ShrinkageParams oracle_params_elliptical(double eta, double gamma, Eigen::Index p,
                                         double kappa, Eigen::Index n);

/// Ledoit-Wolf plug-in estimate with diagnostics.
struct LwEstimate {
  ShrinkageParams params;
  double beta_raw = 0.0;    // before the [0,1] clamp
  bool degenerate = false;  // eta2_hat - eta_hat^2 <= 0 (S proportional to I)
};

/// Ledoit-Wolf plug-in shrinkage parameters:
///
///   beta* = 1 - [ (1/(pn)) sum_i |x_i|^4 - eta2_hat ] / [ n (gamma_p - 1) eta_hat^2 ]
///
/// with plug-in sphericity gamma_p = eta2_hat/eta_hat^2. The eta_hat^2
/// factor in the denominator keeps the statistic scale-invariant;
/// `eta2_factor = false` drops it, matching implementations that assume
/// eta = 1. beta is clamped to [0,1] and alpha = (1-beta) tr(S)/p.
/// A spherical S (eta2_hat == eta_hat^2) yields beta = 0 with the
/// degenerate flag set instead of a division by zero.
LwEstimate lw_params_detail(const DataMatrix& x, bool eta2_factor = true);
ShrinkageParams lw_params(const DataMatrix& x, bool eta2_factor = true);

/// Elliptical (sign-covariance + kurtosis) plug-in estimate with diagnostics.
struct EllEstimate {
  ShrinkageParams params;
  SphericityStats stats;
  double denominator = 0.0;  // T + (1/n){ kappa_hat(2 gamma_hat + p) + gamma_hat + p }
};

/// Elliptical plug-in shrinkage parameters, with T = gamma_hat - 1 from the
/// sign-SCM statistic and the clamped sample kurtosis kappa_hat:
///
///   beta = max(0, T / ( T + (1/n){ kappa_hat(2 gamma_hat + p) + gamma_hat + p } ))
///   alpha = (1 - beta) tr(S)/p
///
/// A non-positive denominator falls back to beta = 0.
EllEstimate ell_params_detail(const DataMatrix& x);
ShrinkageParams ell_params(const DataMatrix& x);

enum class Method { Scm, Lw, Ell };

/// Convenience wrapper: the method's regularized covariance estimate and
/// the parameters it used ((0,1) for the plain SCM).
std::pair<Eigen::MatrixXd, ShrinkageParams> estimate(const DataMatrix& x, Method method,
                                                     bool lw_eta2_factor = true);

}  // namespace ellshrink
