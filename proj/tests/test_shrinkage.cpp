#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ellshrink/oracle.hpp"
#include "ellshrink/rng.hpp"
#include "ellshrink/sampling.hpp"
#include "ellshrink/shrinkage.hpp"
#include "ellshrink/statistics.hpp"
#include "testutil.hpp"

using ellshrink::CovarianceModel;
using ellshrink::DataMatrix;
using ellshrink::RngStream;
using ellshrink::ShrinkageParams;

namespace {

DataMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(rows.begin()->size());
  Eigen::MatrixXd m(n, p);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const double v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return DataMatrix(m);
}

// Exact mean squared error of beta*S + alpha*I around M, given E[tr(S^2)]
// and E[S] = M:
//   beta^2 E[tr S^2] - 2 beta (tr M^2 - alpha tr M) + ||M - alpha I||_F^2.
double exact_rscm_mse(const CovarianceModel& model, double expected_tr_s2, double alpha,
                      double beta) {
  const double p = static_cast<double>(model.dim());
  const double tr_m = p * model.eta();
  const double tr_m2 = p * model.eta2();
  return beta * beta * expected_tr_s2 - 2.0 * beta * (tr_m2 - alpha * tr_m) + tr_m2 -
         2.0 * alpha * tr_m + alpha * alpha * p;
}

}  // namespace

TEST_CASE("rscm assembles beta S plus alpha I") {
  Eigen::MatrixXd s(2, 2);
  s << 5.0, 7.0, 7.0, 10.0;
  const Eigen::MatrixXd out = ellshrink::rscm(s, ShrinkageParams(2.0, 0.5));
  Eigen::MatrixXd expected(2, 2);
  expected << 4.5, 3.5, 3.5, 7.0;
  CHECK((out - expected).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(ellshrink::rscm(Eigen::MatrixXd::Zero(2, 3), ShrinkageParams(0.0, 1.0)),
                  ellshrink::DimensionMismatch);
}

TEST_CASE("general oracle parameters on a frozen point") {
  // eta=1, gamma=1.25, p=2, E[tr S^2]=3: beta = 2(.25)/(3-2) = 1/2.
  const ShrinkageParams params = ellshrink::oracle_params_general(1.0, 1.25, 2, 3.0);
  CHECK(params.beta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(params.alpha == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(ellshrink::oracle_params_general(1.0, 1.25, 2, 2.0),
                  ellshrink::DegenerateDenominator);
  CHECK_THROWS_AS(ellshrink::oracle_params_general(1.0, 1.25, 2, 1.5),
                  ellshrink::DegenerateDenominator);
  CHECK_THROWS_AS(ellshrink::oracle_params_general(-1.0, 1.25, 2, 3.0),
                  ellshrink::DomainError);
}

TEST_CASE("elliptical oracle parameters on frozen points") {
  // eta=1, gamma=2, p=n=100: gaussian beta = 1/2.02, kappa=1/2 beta = 1/2.54.
  const ShrinkageParams gauss = ellshrink::oracle_params_elliptical(1.0, 2.0, 100, 0.0, 100);
  CHECK(gauss.beta == doctest::Approx(1.0 / 2.02).epsilon(1e-14));
  CHECK(gauss.alpha == doctest::Approx(1.0 - 1.0 / 2.02).epsilon(1e-14));

  const ShrinkageParams heavy = ellshrink::oracle_params_elliptical(1.0, 2.0, 100, 0.5, 100);
  CHECK(heavy.beta == doctest::Approx(1.0 / 2.54).epsilon(1e-14));
  CHECK(heavy.alpha == doctest::Approx(1.54 / 2.54).epsilon(1e-14));

  // Spherical population: gamma = 1 forces beta = 0, alpha = eta.
  const ShrinkageParams spherical = ellshrink::oracle_params_elliptical(2.0, 1.0, 10, 0.0, 50);
  CHECK(spherical.beta == 0.0);
  CHECK(spherical.alpha == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("elliptical oracle equals the general oracle under elliptical moments") {
  auto rng = testutil::test_rng(61);
  for (int rep = 0; rep < 12; ++rep) {
    const Eigen::Index p = 2 + static_cast<Eigen::Index>(rng() % 7);
    const CovarianceModel model(testutil::random_spd(p, rng));
    for (const double kappa : {0.0, 0.25, 1.0}) {
      for (const Eigen::Index n : {10L, 100L}) {
        const auto moments =
            ellshrink::scm_moments(model.eta(), model.gamma(), kappa, n, p);
        const ShrinkageParams via_general =
            ellshrink::oracle_params_general(model, moments.expected_tr_s2);
        const ShrinkageParams direct = ellshrink::oracle_params_elliptical(model, kappa, n);
        CHECK(via_general.beta == doctest::Approx(direct.beta).epsilon(1e-12));
        CHECK(via_general.alpha == doctest::Approx(direct.alpha).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("oracle parameters minimize the exact shrinkage mse") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 0.5, 0.5, 1.0;
  const CovarianceModel model(m);
  const double ets2 = 3.0;
  const ShrinkageParams opt = ellshrink::oracle_params_general(model, ets2);

  const double best = exact_rscm_mse(model, ets2, opt.alpha, opt.beta);
  // Scan a fine grid; nothing may beat the closed form.
  double grid_min = std::numeric_limits<double>::infinity();
  double grid_alpha = 0.0;
  double grid_beta = 0.0;
  for (int ia = 0; ia <= 400; ++ia) {
    for (int ib = 0; ib <= 400; ++ib) {
      const double alpha = 2.0 * ia / 400.0;
      const double beta = ib / 400.0;
      const double v = exact_rscm_mse(model, ets2, alpha, beta);
      if (v < grid_min) {
        grid_min = v;
        grid_alpha = alpha;
        grid_beta = beta;
      }
    }
  }
  CHECK(best <= grid_min + 1e-12);
  CHECK(grid_alpha == doctest::Approx(opt.alpha).epsilon(0.02));
  CHECK(grid_beta == doctest::Approx(opt.beta).epsilon(0.02));

  // The attained minimum matches the closed-form optimal mse.
  CHECK(best == doctest::Approx(ellshrink::optimal_mse(model, opt.beta)).epsilon(1e-12));
}

TEST_CASE("oracle parameters minimize a monte carlo mse surface") {
  const CovarianceModel model = ellshrink::make_ar1(4, 0.5);
  const Eigen::Index n = 16;
  const int trials = 20000;
  RngStream rng(201, 0);

  // Sufficient statistics for the mse at any (alpha, beta): mean tr(S^2)
  // and the mean SCM over trials.
  double mean_tr_s2 = 0.0;
  Eigen::MatrixXd mean_s = Eigen::MatrixXd::Zero(4, 4);
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXd s = ellshrink::scm(ellshrink::sample_gaussian(model, n, rng));
    mean_tr_s2 += s.squaredNorm();
    mean_s += s;
  }
  mean_tr_s2 /= trials;
  mean_s /= trials;

  const auto mc_mse = [&](double alpha, double beta) {
    Eigen::MatrixXd target = model.matrix();
    target.diagonal().array() -= alpha;
    return beta * beta * mean_tr_s2 - 2.0 * beta * (target.array() * mean_s.array()).sum() +
           target.squaredNorm();
  };

  double grid_min = std::numeric_limits<double>::infinity();
  double grid_alpha = 0.0;
  double grid_beta = 0.0;
  for (int ia = 0; ia <= 200; ++ia) {
    for (int ib = 0; ib <= 200; ++ib) {
      const double alpha = 2.0 * ia / 200.0;
      const double beta = ib / 200.0;
      const double v = mc_mse(alpha, beta);
      if (v < grid_min) {
        grid_min = v;
        grid_alpha = alpha;
        grid_beta = beta;
      }
    }
  }

  const ShrinkageParams opt = ellshrink::oracle_params_elliptical(model, 0.0, n);
  CHECK(grid_alpha == doctest::Approx(opt.alpha).epsilon(0.08));
  CHECK(grid_beta == doctest::Approx(opt.beta).epsilon(0.08));
  CHECK(mc_mse(opt.alpha, opt.beta) <= grid_min * 1.01);
}

TEST_CASE("ledoit-wolf beta is one when sample outer products never vary") {
  // Identical rows make every x_i x_i^T equal to S, so nothing suggests
  // shrinking: beta = 1, alpha = 0.
  const auto est = ellshrink::lw_params_detail(from_rows({{1.0, 2.0}, {1.0, 2.0}}));
  CHECK(est.params.beta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est.params.alpha == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(est.degenerate);
}

TEST_CASE("ledoit-wolf degenerates gracefully on a spherical scm") {
  const auto est = ellshrink::lw_params_detail(from_rows({{1.0, 0.0}, {0.0, 1.0}}));
  CHECK(est.degenerate);
  CHECK(est.params.beta == 0.0);
  CHECK(est.params.alpha == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("ledoit-wolf matches an outer-product reimplementation") {
  auto gen = testutil::test_rng(67);
  for (int rep = 0; rep < 10; ++rep) {
    const Eigen::MatrixXd rows = testutil::random_matrix(30, 5, gen);
    const DataMatrix x(rows);
    const Eigen::MatrixXd s = ellshrink::scm(x);
    const double eta = ellshrink::eta_hat(s);
    const double eta2 = ellshrink::eta2_hat(s);

    // Direct route: mean ||x_i x_i^T - S||_F^2 over n (1/(pn) scaling).
    double dispersion_sum = 0.0;
    for (Eigen::Index i = 0; i < 30; ++i) {
      const Eigen::MatrixXd outer = rows.row(i).transpose() * rows.row(i);
      dispersion_sum += (outer - s).squaredNorm();
    }
    const double numerator = dispersion_sum / (5.0 * 30.0);
    const double expected_raw = 1.0 - numerator / (30.0 * (eta2 - eta * eta));

    const auto est = ellshrink::lw_params_detail(x, true);
    CHECK(est.beta_raw == doctest::Approx(expected_raw).epsilon(1e-10));
    CHECK(est.params.beta == doctest::Approx(std::clamp(expected_raw, 0.0, 1.0)).epsilon(1e-10));
    CHECK(est.params.alpha ==
          doctest::Approx((1.0 - est.params.beta) * eta).epsilon(1e-12));

    // Convention switch: without the eta^2 factor the subtracted term is
    // scaled by eta_hat^2 relative to the invariant form.
    const auto literal = ellshrink::lw_params_detail(x, false);
    const double gamma_p = eta2 / (eta * eta);
    const double literal_raw = 1.0 - numerator / (30.0 * (gamma_p - 1.0));
    CHECK(literal.beta_raw == doctest::Approx(literal_raw).epsilon(1e-10));
  }
}

TEST_CASE("ledoit-wolf is scale invariant in its default convention") {
  auto gen = testutil::test_rng(68);
  const Eigen::MatrixXd rows = testutil::random_matrix(25, 4, gen);
  const auto base = ellshrink::lw_params_detail(DataMatrix(rows), true);
  const auto scaled = ellshrink::lw_params_detail(DataMatrix(3.0 * rows), true);
  CHECK(scaled.params.beta == doctest::Approx(base.params.beta).epsilon(1e-12));
  CHECK(scaled.params.alpha == doctest::Approx(9.0 * base.params.alpha).epsilon(1e-12));
}

TEST_CASE("ledoit-wolf mean beta tracks the gaussian oracle") {
  const CovarianceModel model = ellshrink::make_ar1(10, 0.7);
  const Eigen::Index n = 50;
  const int trials = 400;
  RngStream rng(202, 0);
  double beta_sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    beta_sum += ellshrink::lw_params(ellshrink::sample_gaussian(model, n, rng)).beta;
  }
  const double oracle_beta = ellshrink::oracle_params_elliptical(model, 0.0, n).beta;
  CHECK(beta_sum / trials == doctest::Approx(oracle_beta).epsilon(0.06));
}

TEST_CASE("ell estimator on a frozen aligned data set") {
  // Rows all lie on the (1,1) direction: sign SCM sphericity = 2 - 1/2,
  // per-column kurtosis sums to -2.48, and the closed form gives
  // beta = 60/103.
  const auto est =
      ellshrink::ell_params_detail(from_rows({{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}, {-1.0, -1.0}}));
  CHECK(est.stats.gamma_hat == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(est.stats.kappa_hat == doctest::Approx(-31.0 / 75.0).epsilon(1e-12));
  CHECK(est.denominator == doctest::Approx(103.0 / 120.0).epsilon(1e-12));
  CHECK(est.params.beta == doctest::Approx(60.0 / 103.0).epsilon(1e-12));
  CHECK(est.params.alpha == doctest::Approx(3.75 * 43.0 / 103.0).epsilon(1e-12));
}

TEST_CASE("ell estimator clamps beta at zero when the statistic dips below one") {
  // The +/-1 design has gamma_hat = 1/2 and clamped kappa_hat = -1/2;
  // the denominator is negative, so beta falls back to 0 and the estimate
  // is the spherical eta_hat I.
  const auto est = ellshrink::ell_params_detail(
      from_rows({{1.0, 1.0}, {-1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}}));
  CHECK(est.stats.gamma_hat == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(est.stats.kappa_hat == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(est.denominator == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(est.params.beta == 0.0);
  CHECK(est.params.alpha == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ell mean beta tracks the elliptical oracle in large dimensions") {
  const auto model = ellshrink::make_spiked(
      {ellshrink::SpikedBlock{1.0, 25}, ellshrink::SpikedBlock{0.01, 25}});
  const Eigen::Index n = 100;
  const int trials = 200;
  RngStream rng(203, 0);
  double beta_sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    beta_sum += ellshrink::ell_params(ellshrink::sample_gaussian(model, n, rng)).beta;
  }
  const double oracle_beta = ellshrink::oracle_params_elliptical(model, 0.0, n).beta;
  CHECK(beta_sum / trials == doctest::Approx(oracle_beta).epsilon(0.06));
}

TEST_CASE("plug-in estimators keep beta in range on heavy-tailed data") {
  const CovarianceModel model = ellshrink::make_ar1(6, 0.8);
  RngStream rng(204, 0);
  for (int t = 0; t < 50; ++t) {
    const DataMatrix x = ellshrink::sample_student_t(model, 4.2, 12, rng);
    for (const auto& params : {ellshrink::lw_params(x), ellshrink::ell_params(x)}) {
      CHECK(params.beta >= 0.0);
      CHECK(params.beta <= 1.0);
      CHECK(params.alpha >= 0.0);
      const double eta = ellshrink::eta_hat(ellshrink::scm(x));
      CHECK(params.alpha == doctest::Approx((1.0 - params.beta) * eta).epsilon(1e-10));
    }
  }
}

TEST_CASE("estimators require at least two observations") {
  const DataMatrix single = from_rows({{1.0, 2.0}});
  CHECK_THROWS_AS(ellshrink::lw_params(single), ellshrink::DomainError);
  CHECK_THROWS_AS(ellshrink::ell_params(single), ellshrink::DomainError);
}

TEST_CASE("estimate wrapper matches its parts") {
  auto gen = testutil::test_rng(69);
  const Eigen::MatrixXd rows = testutil::random_matrix(40, 6, gen);
  const DataMatrix x(rows);
  const Eigen::MatrixXd s = ellshrink::scm(x);

  const auto [scm_est, scm_params] = ellshrink::estimate(x, ellshrink::Method::Scm);
  CHECK(scm_params.beta == 1.0);
  CHECK(scm_params.alpha == 0.0);
  CHECK((scm_est - s).cwiseAbs().maxCoeff() == 0.0);

  const auto [lw_est, lw_p] = ellshrink::estimate(x, ellshrink::Method::Lw);
  const ShrinkageParams lw_direct = ellshrink::lw_params(x);
  CHECK(lw_p.beta == lw_direct.beta);
  CHECK((lw_est - ellshrink::rscm(s, lw_direct)).cwiseAbs().maxCoeff() < 1e-14);

  const auto [ell_est, ell_p] = ellshrink::estimate(x, ellshrink::Method::Ell);
  const ShrinkageParams ell_direct = ellshrink::ell_params(x);
  CHECK(ell_p.beta == ell_direct.beta);
  CHECK((ell_est - ellshrink::rscm(s, ell_direct)).cwiseAbs().maxCoeff() < 1e-14);
}
