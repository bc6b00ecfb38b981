#include "ellshrink/types.hpp"

#include <cmath>
#include <sstream>

namespace ellshrink {

CovarianceModel::CovarianceModel(Eigen::MatrixXd matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 1) {
    std::ostringstream msg;
    msg << "covariance matrix must be square, got " << matrix.rows() << "x"
        << matrix.cols();
    throw DomainError(msg.str());
  }
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= kSymmetryTolerance)) {
    std::ostringstream msg;
    msg << "matrix is not symmetric: max |A - A^T| entry = " << asym
        << " exceeds tolerance " << kSymmetryTolerance;
    throw NotSymmetric(msg.str());
  }
  matrix_ = 0.5 * (matrix + matrix.transpose());

  Eigen::LLT<Eigen::MatrixXd> llt(matrix_);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("Cholesky factorization failed: matrix is not positive definite");
  }
  chol_lower_ = llt.matrixL();

  const auto p = static_cast<double>(matrix_.rows());
  eta_ = matrix_.trace() / p;
  eta2_ = matrix_.squaredNorm() / p;  // tr(M^2) = ||M||_F^2 for symmetric M
  gamma_ = eta2_ / (eta_ * eta_);
  if (!(eta_ > 0.0) || !(eta2_ > 0.0) || !std::isfinite(gamma_)) {
    throw NotPositiveDefinite("degenerate scale statistics for covariance matrix");
  }
}

DataMatrix::DataMatrix(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() < 1 || rows_.cols() < 1) {
    throw DomainError("data matrix needs n >= 1 and p >= 1");
  }
  if (!rows_.allFinite()) {
    throw DomainError("data matrix contains non-finite entries");
  }
}

ShrinkageParams::ShrinkageParams(double alpha_in, double beta_in)
    : alpha(alpha_in), beta(beta_in) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("shrinkage alpha must be finite and >= 0");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("shrinkage beta must lie in [0, 1]");
  }
}

EllipticalSpec::EllipticalSpec(Family family, CovarianceModel covariance, double nu)
    : family_(family), nu_(nu), covariance_(std::move(covariance)) {
  if (family_ == Family::StudentT && !(nu_ > 4.0)) {
    throw DomainError("StudentT requires nu > 4 for finite 4th-order moments");
  }
}

}  // namespace ellshrink
