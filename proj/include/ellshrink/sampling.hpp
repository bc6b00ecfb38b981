#pragma once

#include "ellshrink/rng.hpp"
#include "ellshrink/types.hpp"

namespace ellshrink {

/// Covariance of an AR(1) process: [M]_ij = rho^|i-j|, rho in (0, 1).
/// The result has eta = 1 exactly.
CovarianceModel make_ar1(Eigen::Index p, double rho);

/// One spectrum block: `multiplicity` repeated copies of `value`.
struct SpikedBlock {
  double value = 0.0;
  Eigen::Index multiplicity = 0;
};

/// Diagonal covariance with the given spectrum, in the given order.
CovarianceModel make_spiked(const std::vector<SpikedBlock>& spectrum);

/// Rows i.i.d. N_p(0, M), drawn as x = L z with L = chol(M).
DataMatrix sample_gaussian(const CovarianceModel& model, Eigen::Index n, RngStream& rng);

/// Rows i.i.d. multivariate-t with nu > 4 degrees of freedom, scaled so
/// that Cov(x) = M exactly:  x = sqrt((nu-2)/s) L z,  s ~ chi^2_nu.
DataMatrix sample_student_t(const CovarianceModel& model, double nu, Eigen::Index n,
                            RngStream& rng);

/// Dispatch on the spec's family.
DataMatrix sample(const EllipticalSpec& spec, Eigen::Index n, RngStream& rng);

/// Elliptical kurtosis parameter: 0 for Gaussian, 2/(nu-4) for t_nu.
double elliptical_kurtosis(Family family, double nu);
double elliptical_kurtosis(const EllipticalSpec& spec);

}  // namespace ellshrink
