#include "ellshrink/shrinkage.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ellshrink/statistics.hpp"

namespace ellshrink {

Eigen::MatrixXd rscm(const Eigen::MatrixXd& s, const ShrinkageParams& params) {
  if (s.rows() != s.cols()) {
    throw DimensionMismatch("rscm: S must be square");
  }
  Eigen::MatrixXd out = params.beta * s;
  out.diagonal().array() += params.alpha;
  return out;
}

ShrinkageParams oracle_params_general(double eta, double gamma, Eigen::Index p,
                                      double expected_tr_s2) {
  if (!(eta > 0.0) || !(gamma >= 1.0) || p < 1) {
    throw DomainError("oracle_params_general: need eta > 0, gamma >= 1, p >= 1");
  }
  const double pd = static_cast<double>(p);
  const double denom = expected_tr_s2 - pd * eta * eta;
  if (!(denom > 0.0)) {
    std::ostringstream msg;
    msg << "oracle_params_general: E[tr(S^2)] = " << expected_tr_s2
        << " does not exceed p eta^2 = " << pd * eta * eta;
    throw DegenerateDenominator(msg.str());
  }
  const double beta = pd * (gamma - 1.0) * eta * eta / denom;
  return ShrinkageParams((1.0 - beta) * eta, beta);
}

ShrinkageParams oracle_params_general(const CovarianceModel& model, double expected_tr_s2) {
  return oracle_params_general(model.eta(), model.gamma(), model.dim(), expected_tr_s2);
}

ShrinkageParams oracle_params_elliptical(double eta, double gamma, Eigen::Index p,
                                         double kappa, Eigen::Index n) {
  if (!(eta > 0.0) || !(gamma >= 1.0) || p < 1 || n < 1) {
    throw DomainError("oracle_params_elliptical: need eta > 0, gamma >= 1, n, p >= 1");
  }
  const double pd = static_cast<double>(p);
  if (!(kappa >= -2.0 / (pd + 2.0))) {
    std::ostringstream msg;
    msg << "oracle_params_elliptical: kappa = " << kappa << " below the lower bound "
        << -2.0 / (pd + 2.0);
    throw DomainError(msg.str());
  }
  const double nd = static_cast<double>(n);
  const double noise = (kappa * (2.0 * gamma + pd) + gamma + pd) / nd;
  const double beta = (gamma - 1.0) / (gamma - 1.0 + noise);
  return ShrinkageParams((1.0 - beta) * eta, beta);
}

ShrinkageParams oracle_params_elliptical(const CovarianceModel& model, double kappa,
                                         Eigen::Index n) {
  return oracle_params_elliptical(model.eta(), model.gamma(), model.dim(), kappa, n);
}

LwEstimate lw_params_detail(const DataMatrix& x, bool eta2_factor) {
  if (x.n() < 2) {
    throw DomainError("lw_params: need n >= 2");
  }
  const double pd = static_cast<double>(x.p());
  const double nd = static_cast<double>(x.n());
  const Eigen::MatrixXd s = scm(x);
  const double eta = eta_hat(s);
  if (!(eta * pd > 0.0)) {
    throw DomainError("lw_params: tr(S) must be > 0");
  }
  const double eta2 = eta2_hat(s);

  LwEstimate out;
  const double dispersion = eta2 - eta * eta;  // ||S - eta I||_F^2 / p
  if (!(dispersion > 0.0)) {
    // S is (numerically) a multiple of the identity: nothing to shrink.
    out.params = ShrinkageParams(eta, 0.0);
    out.beta_raw = 0.0;
    out.degenerate = true;
    return out;
  }

  const double mean_norm4 = x.rows().rowwise().squaredNorm().array().square().sum() / (pd * nd);
  const double gamma_plugin = eta2 / (eta * eta);
  double denom = nd * (gamma_plugin - 1.0);
  if (eta2_factor) {
    denom *= eta * eta;  // restores scale invariance; equals n (eta2_hat - eta_hat^2)
  }
  out.beta_raw = 1.0 - (mean_norm4 - eta2) / denom;
  const double beta = std::clamp(out.beta_raw, 0.0, 1.0);
  out.params = ShrinkageParams((1.0 - beta) * eta, beta);
  return out;
}

ShrinkageParams lw_params(const DataMatrix& x, bool eta2_factor) {
  return lw_params_detail(x, eta2_factor).params;
}

EllEstimate ell_params_detail(const DataMatrix& x) {
  if (x.n() < 2) {
    throw DomainError("ell_params: need n >= 2");
  }
  const double pd = static_cast<double>(x.p());
  const double nd = static_cast<double>(x.n());

  EllEstimate out;
  out.stats = sphericity_stats(x);
  const double gam = out.stats.gamma_hat;
  const double kap = out.stats.kappa_hat;
  const double t = gam - 1.0;
  out.denominator = t + (kap * (2.0 * gam + pd) + gam + pd) / nd;

  double beta = 0.0;
  if (out.denominator > 0.0) {
    beta = std::max(0.0, t / out.denominator);
  }
  beta = std::min(beta, 1.0);
  out.params = ShrinkageParams((1.0 - beta) * out.stats.eta_hat, beta);
  return out;
}

ShrinkageParams ell_params(const DataMatrix& x) { return ell_params_detail(x).params; }

std::pair<Eigen::MatrixXd, ShrinkageParams> estimate(const DataMatrix& x, Method method,
                                                     bool lw_eta2_factor) {
  ShrinkageParams params;
  switch (method) {
    case Method::Scm:
      params = ShrinkageParams(0.0, 1.0);
      break;
    case Method::Lw:
      params = lw_params(x, lw_eta2_factor);
      break;
    case Method::Ell:
      params = ell_params(x);
      break;
  }
  return {rscm(scm(x), params), params};
}

}  // namespace ellshrink
