#include "ellshrink/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ellshrink/bench.hpp"
#include "ellshrink/data_io.hpp"
#include "ellshrink/oracle.hpp"
#include "ellshrink/shrinkage.hpp"
#include "ellshrink/statistics.hpp"

namespace ellshrink {

namespace {

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace

int cmd_bench(const std::string& config_path, const std::string& out_path,
              unsigned workers, std::ostream& out, std::ostream& err) {
  std::vector<ScenarioConfig> scenarios;
  try {
    scenarios = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (const char* seed_env = std::getenv("ELLSHRINK_SEED")) {
    char* end = nullptr;
    const unsigned long long seed = std::strtoull(seed_env, &end, 10);
    if (end == seed_env || *end != '\0') {
      err << "config error: ELLSHRINK_SEED='" << seed_env
          << "' is not a nonnegative integer\n";
      return kExitUsage;
    }
    for (auto& scenario : scenarios) {
      scenario.master_seed = seed;
    }
    out << "master_seed overridden by ELLSHRINK_SEED=" << seed << "\n";
  }

  try {
    // Fail before the Monte Carlo work, not after it, if the output path
    // cannot be written.
    if (!std::ofstream(out_path, std::ios::app)) {
      throw IoError("cannot open '" + out_path + "' for writing");
    }
    std::vector<BenchRecord> records;
    for (const auto& scenario : scenarios) {
      out << "running scenario '" << scenario.name << "' (" << scenario.trials
          << " trials x " << scenario.n_values.size() << " sample sizes)\n";
      auto scenario_records = run_scenario(scenario, workers);
      records.insert(records.end(), scenario_records.begin(), scenario_records.end());
    }
    write_csv(records, out_path);
    out << "wrote " << records.size() << " records to " << out_path << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_estimate(const std::string& data_path, const std::string& method,
                 const std::string& out_path, bool transpose, std::ostream& out,
                 std::ostream& err) {
  Method kind;
  if (method == "scm") {
    kind = Method::Scm;
  } else if (method == "lw") {
    kind = Method::Lw;
  } else if (method == "ell") {
    kind = Method::Ell;
  } else {
    err << "usage error: unknown method '" << method << "' (expected scm, lw or ell)\n";
    return kExitUsage;
  }

  try {
    DataMatrix x = [&]() {
      try {
        return read_data_csv(data_path, transpose);
      } catch (const IoError& e) {
        throw ConfigError(e.what());
      } catch (const DomainError& e) {
        throw ConfigError(data_path + ": " + e.what());
      }
    }();

    const auto [cov, params] = estimate(x, kind);
    write_matrix_csv(cov, out_path);

    const Eigen::MatrixXd s = scm(x);
    out << "p = " << x.p() << "\n";
    out << "n = " << x.n() << "\n";
    out << "eta_hat = " << fmt(eta_hat(s)) << "\n";
    // Both sphericity variants: the sign-SCM statistic and the SCM
    // plug-in differ in finite samples and explain LW/Ell discrepancies.
    try {
      out << "gamma_hat_sign = " << fmt(gamma_hat_sign(x)) << "\n";
    } catch (const ZeroNormRow&) {
      out << "gamma_hat_sign = nan (zero-norm row present)\n";
    }
    out << "gamma_hat_plugin = " << fmt(gamma_hat_plugin(s)) << "\n";
    try {
      out << "kappa_hat = " << fmt(kappa_hat(x)) << "\n";
    } catch (const ZeroVarianceColumn&) {
      out << "kappa_hat = nan (zero-variance column present)\n";
    }
    out << "alpha_hat = " << fmt(params.alpha) << "\n";
    out << "beta_hat = " << fmt(params.beta) << "\n";
    out << "wrote " << cov.rows() << "x" << cov.cols() << " estimate to " << out_path
        << "\n";
  } catch (const ConfigError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_oracle(Eigen::Index p, Eigen::Index n, double gamma, double kappa, double eta,
               std::ostream& out, std::ostream& err) {
  try {
    const ScmMoments moments = scm_moments(eta, gamma, kappa, n, p);
    const ShrinkageParams params = oracle_params_elliptical(eta, gamma, p, kappa, n);
    out << "beta_o = " << fmt(params.beta) << "\n";
    out << "alpha_o = " << fmt(params.alpha) << "\n";
    out << "mse_scm = " << fmt(moments.mse) << "\n";
    out << "nmse_scm = " << fmt(moments.nmse) << "\n";
    out << "optimal_nmse = " << fmt((gamma - 1.0) * (1.0 - params.beta) / gamma) << "\n";
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ellshrink
