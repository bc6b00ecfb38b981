#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "ellshrink/errors.hpp"

namespace ellshrink {

/// True p x p covariance matrix together with its cached scale and
/// sphericity statistics:
///
///   eta   = tr(M)/p           (average eigenvalue)
///   eta2  = tr(M^2)/p
///   gamma = eta2/eta^2 = p tr(M^2)/tr(M)^2   (>= 1, == 1 iff M = cI)
///
/// Construction symmetrizes inputs whose asymmetry is below 1e-10 per
/// entry and rejects anything worse; positive definiteness is checked by
/// Cholesky and the lower factor is kept for the samplers.
class CovarianceModel {
 public:
  explicit CovarianceModel(Eigen::MatrixXd matrix);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const Eigen::MatrixXd& chol_lower() const { return chol_lower_; }
  double eta() const { return eta_; }
  double eta2() const { return eta2_; }
  double gamma() const { return gamma_; }

  static constexpr double kSymmetryTolerance = 1e-10;

 private:
  Eigen::MatrixXd matrix_;
  Eigen::MatrixXd chol_lower_;
  double eta_ = 0.0;
  double eta2_ = 0.0;
  double gamma_ = 0.0;
};

/// n x p matrix of i.i.d. zero-mean observations; row i is one sample.
/// Entries must be finite.
class DataMatrix {
 public:
  explicit DataMatrix(Eigen::MatrixXd rows);

  Eigen::Index n() const { return rows_.rows(); }
  Eigen::Index p() const { return rows_.cols(); }
  const Eigen::MatrixXd& rows() const { return rows_; }

 private:
  Eigen::MatrixXd rows_;
};

/// The (alpha, beta) pair defining a regularized SCM  beta*S + alpha*I.
struct ShrinkageParams {
  double alpha = 0.0;  // >= 0
  double beta = 0.0;   // in [0, 1]

  ShrinkageParams() = default;
  ShrinkageParams(double alpha_in, double beta_in);
};

/// Sample scale/sphericity statistics of one data matrix.
struct SphericityStats {
  double eta_hat = 0.0;    // tr(S)/p
  double eta2_hat = 0.0;   // tr(S^2)/p
  double gamma_hat = 0.0;  // sign-SCM based, unclamped
  double kappa_hat = 0.0;  // clamped at -2/(p+2)
};

enum class Family { Gaussian, StudentT };

/// Sampling family plus the population covariance. StudentT requires
/// nu > 4 so that 4th-order moments exist.
class EllipticalSpec {
 public:
  EllipticalSpec(Family family, CovarianceModel covariance, double nu = 0.0);

  Family family() const { return family_; }
  double nu() const { return nu_; }
  const CovarianceModel& covariance() const { return covariance_; }

 private:
  Family family_;
  double nu_;
  CovarianceModel covariance_;
};

}  // namespace ellshrink
