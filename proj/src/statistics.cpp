#include "ellshrink/statistics.hpp"

#include <cmath>
#include <sstream>

namespace ellshrink {

namespace {

// (1/n) A^T A accumulated through a symmetric rank update, then mirrored
// to a full matrix.
Eigen::MatrixXd scaled_gram(const Eigen::MatrixXd& rows) {
  const auto n = rows.rows();
  const auto p = rows.cols();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
  s.selfadjointView<Eigen::Lower>().rankUpdate(rows.transpose(),
                                               1.0 / static_cast<double>(n));
  return s.selfadjointView<Eigen::Lower>();
}

}  // namespace

Eigen::MatrixXd scm(const DataMatrix& x) { return scaled_gram(x.rows()); }

Eigen::MatrixXd sign_scm(const DataMatrix& x) {
  const auto& rows = x.rows();
  Eigen::MatrixXd normalized(rows.rows(), rows.cols());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    const double norm = rows.row(i).norm();
    if (norm == 0.0) {
      std::ostringstream msg;
      msg << "sign_scm: row " << i << " has zero Euclidean norm";
      throw ZeroNormRow(static_cast<std::size_t>(i), msg.str());
    }
    normalized.row(i) = rows.row(i) / norm;
  }
  return scaled_gram(normalized);
}

double gamma_hat_sign(const DataMatrix& x) {
  const auto p = static_cast<double>(x.p());
  const auto n = static_cast<double>(x.n());
  const Eigen::MatrixXd s_sgn = sign_scm(x);
  return p * s_sgn.squaredNorm() - p / n;
}

double kappa_hat(const DataMatrix& x) {
  const auto& rows = x.rows();
  const auto p = static_cast<double>(x.p());
  double kurtosis_sum = 0.0;
  for (Eigen::Index j = 0; j < x.p(); ++j) {
    const auto col = rows.col(j).array();
    const double m2 = col.square().mean();
    if (m2 == 0.0) {
      std::ostringstream msg;
      msg << "kappa_hat: column " << j << " has zero second sample moment";
      throw ZeroVarianceColumn(static_cast<std::size_t>(j), msg.str());
    }
    const double m4 = col.square().square().mean();
    kurtosis_sum += m4 / (m2 * m2) - 3.0;
  }
  const double lower_bound = -2.0 / (p + 2.0);
  return std::max(lower_bound, kurtosis_sum / (3.0 * p));
}

double eta_hat(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols()) {
    throw DimensionMismatch("eta_hat: matrix must be square");
  }
  return s.trace() / static_cast<double>(s.rows());
}

double eta2_hat(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols()) {
    throw DimensionMismatch("eta2_hat: matrix must be square");
  }
  // tr(S^2) = sum_ij S_ij S_ji, which is ||S||_F^2 when S is symmetric.
  const double tr_s2 = (s.array() * s.transpose().array()).sum();
  return tr_s2 / static_cast<double>(s.rows());
}

SphericityStats sphericity_stats(const DataMatrix& x) {
  const Eigen::MatrixXd s = scm(x);
  SphericityStats stats;
  stats.eta_hat = eta_hat(s);
  stats.eta2_hat = eta2_hat(s);
  stats.gamma_hat = gamma_hat_sign(x);
  stats.kappa_hat = kappa_hat(x);
  return stats;
}

double gamma_hat_plugin(const Eigen::MatrixXd& s) {
  const double eta = eta_hat(s);
  return eta2_hat(s) / (eta * eta);
}

}  // namespace ellshrink
