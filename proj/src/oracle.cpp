#include "ellshrink/oracle.hpp"

#include <sstream>

namespace ellshrink {

ScmMoments scm_moments(double eta, double gamma, double kappa, Eigen::Index n,
                       Eigen::Index p) {
  if (!(eta > 0.0)) {
    throw DomainError("scm_moments: eta must be > 0");
  }
  if (!(gamma >= 1.0)) {
    throw DomainError("scm_moments: gamma must be >= 1");
  }
  if (n < 1 || p < 1) {
    throw DomainError("scm_moments: n and p must be >= 1");
  }
  const double pd = static_cast<double>(p);
  if (!(kappa >= -2.0 / (pd + 2.0))) {
    std::ostringstream msg;
    msg << "scm_moments: kappa = " << kappa << " below the lower bound "
        << -2.0 / (pd + 2.0);
    throw DomainError(msg.str());
  }
  const double nd = static_cast<double>(n);
  const double bracket = kappa * (2.0 * gamma + pd) + gamma + pd;
  ScmMoments out;
  out.mse = (pd / nd) * eta * eta * bracket;
  out.nmse = bracket / (gamma * nd);
  out.expected_tr_s2 = out.mse + pd * gamma * eta * eta;
  return out;
}

double optimal_mse(const CovarianceModel& model, double beta_o) {
  if (!(beta_o >= 0.0 && beta_o < 1.0)) {
    std::ostringstream msg;
    msg << "optimal_mse: beta_o must lie in [0,1), got " << beta_o;
    throw DomainError(msg.str());
  }
  const double p = static_cast<double>(model.dim());
  return p * (model.gamma() - 1.0) * model.eta() * model.eta() * (1.0 - beta_o);
}

double optimal_nmse(const CovarianceModel& model, double beta_o) {
  if (!(beta_o >= 0.0 && beta_o < 1.0)) {
    std::ostringstream msg;
    msg << "optimal_nmse: beta_o must lie in [0,1), got " << beta_o;
    throw DomainError(msg.str());
  }
  return (model.gamma() - 1.0) * (1.0 - beta_o) / model.gamma();
}

Eigen::MatrixXd commutation_matrix(Eigen::Index p) {
  if (p < 1) {
    throw DomainError("commutation_matrix: p must be >= 1");
  }
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(p * p, p * p);
  // vec(A)[i + p j] = A(i,j), so vec(A^T)[i + p j] = vec(A)[j + p i].
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      k(i + p * j, j + p * i) = 1.0;
    }
  }
  return k;
}

Eigen::MatrixXd cov_vec_scm(const CovarianceModel& model, double kappa, Eigen::Index n) {
  const Eigen::Index p = model.dim();
  if (p > kCovVecScmMaxDim) {
    std::ostringstream msg;
    msg << "cov_vec_scm: p = " << p << " exceeds the p^2 x p^2 materialization guard "
        << kCovVecScmMaxDim;
    throw DimensionTooLarge(msg.str());
  }
  if (n < 1) {
    throw DomainError("cov_vec_scm: n must be >= 1");
  }
  const double pd = static_cast<double>(p);
  if (!(kappa >= -2.0 / (pd + 2.0))) {
    throw DomainError("cov_vec_scm: kappa below its theoretical lower bound");
  }
  const auto& m = model.matrix();
  const Eigen::Index p2 = p * p;

  Eigen::MatrixXd kron(p2, p2);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      kron.block(i * p, j * p, p, p) = m(i, j) * m;
    }
  }

  // (I + K) MM without forming K: row r of K*MM is row perm(r) of MM,
  // where perm(i + p j) = j + p i.
  Eigen::MatrixXd sym = kron;
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      sym.row(i + p * j) += kron.row(j + p * i);
    }
  }

  Eigen::VectorXd vec_m = Eigen::Map<const Eigen::VectorXd>(m.data(), p2);
  const double nd = static_cast<double>(n);
  return ((1.0 + kappa) / nd) * sym + (kappa / nd) * (vec_m * vec_m.transpose());
}

}  // namespace ellshrink
