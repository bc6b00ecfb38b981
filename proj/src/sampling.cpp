#include "ellshrink/sampling.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace ellshrink {

CovarianceModel make_ar1(Eigen::Index p, double rho) {
  if (p < 1) {
    throw DomainError("make_ar1: p must be >= 1");
  }
  if (!(rho > 0.0 && rho < 1.0)) {
    std::ostringstream msg;
    msg << "make_ar1: rho must lie in (0,1), got " << rho;
    throw DomainError(msg.str());
  }
  Eigen::MatrixXd m(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    m(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double v = std::pow(rho, static_cast<double>(i - j));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return CovarianceModel(std::move(m));
}

CovarianceModel make_spiked(const std::vector<SpikedBlock>& spectrum) {
  Eigen::Index p = 0;
  for (const auto& block : spectrum) {
    if (!(block.value > 0.0)) {
      std::ostringstream msg;
      msg << "make_spiked: eigenvalue must be > 0, got " << block.value;
      throw DomainError(msg.str());
    }
    if (block.multiplicity < 1) {
      throw DomainError("make_spiked: multiplicity must be >= 1");
    }
    p += block.multiplicity;
  }
  if (p < 1) {
    throw DomainError("make_spiked: empty spectrum");
  }
  Eigen::VectorXd diag(p);
  Eigen::Index at = 0;
  for (const auto& block : spectrum) {
    diag.segment(at, block.multiplicity).setConstant(block.value);
    at += block.multiplicity;
  }
  return CovarianceModel(diag.asDiagonal());
}

namespace {

// Standard normal matrix filled row by row; the fill order is part of the
// stream's determinism contract.
Eigen::MatrixXd standard_normal_rows(Eigen::Index n, Eigen::Index p, RngStream& rng) {
  Eigen::MatrixXd z(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      z(i, j) = rng.normal();
    }
  }
  return z;
}

}  // namespace

DataMatrix sample_gaussian(const CovarianceModel& model, Eigen::Index n, RngStream& rng) {
  if (n < 1) {
    throw DomainError("sample_gaussian: n must be >= 1");
  }
  Eigen::MatrixXd z = standard_normal_rows(n, model.dim(), rng);
  return DataMatrix(z * model.chol_lower().transpose());
}

DataMatrix sample_student_t(const CovarianceModel& model, double nu, Eigen::Index n,
                            RngStream& rng) {
  if (!(nu > 4.0)) {
    std::ostringstream msg;
    msg << "sample_student_t: nu must be > 4 (finite 4th-order moments), got " << nu;
    throw DomainError(msg.str());
  }
  if (n < 1) {
    throw DomainError("sample_student_t: n must be >= 1");
  }
  Eigen::MatrixXd z = standard_normal_rows(n, model.dim(), rng);
  // x_i = sqrt((nu-2)/s_i) L z_i with s_i ~ chi^2_nu; the (nu-2) scaling
  // makes M the covariance matrix, not just the scatter matrix.
  Eigen::VectorXd scale(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    scale(i) = std::sqrt((nu - 2.0) / rng.chi_squared(nu));
  }
  return DataMatrix(scale.asDiagonal() * z * model.chol_lower().transpose());
}

DataMatrix sample(const EllipticalSpec& spec, Eigen::Index n, RngStream& rng) {
  if (spec.family() == Family::Gaussian) {
    return sample_gaussian(spec.covariance(), n, rng);
  }
  return sample_student_t(spec.covariance(), spec.nu(), n, rng);
}

double elliptical_kurtosis(Family family, double nu) {
  if (family == Family::Gaussian) {
    return 0.0;
  }
  if (!(nu > 4.0)) {
    throw DomainError("elliptical_kurtosis: StudentT requires nu > 4");
  }
  return 2.0 / (nu - 4.0);
}

double elliptical_kurtosis(const EllipticalSpec& spec) {
  return elliptical_kurtosis(spec.family(), spec.nu());
}

}  // namespace ellshrink
