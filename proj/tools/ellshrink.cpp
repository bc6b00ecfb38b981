#include <CLI11.hpp>
#include <iostream>

#include "ellshrink/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ellshrink: shrinkage covariance estimation for high-dimensional data"};
  app.require_subcommand(1);

  // bench
  std::string config_path;
  std::string bench_out;
  unsigned workers = 0;
  auto* bench = app.add_subcommand("bench", "Run Monte Carlo benchmark scenarios");
  bench->add_option("--config", config_path, "Scenario config file (JSON)")->required();
  bench->add_option("--out", bench_out, "Output CSV path")->required();
  bench->add_option("--workers", workers, "Worker thread count (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  // estimate
  std::string data_path;
  std::string method = "ell";
  std::string estimate_out;
  bool transpose = false;
  auto* est = app.add_subcommand("estimate", "Estimate covariance from a data CSV");
  est->add_option("--data", data_path, "Numeric CSV, rows = observations")->required();
  est->add_option("--method", method, "Estimator: scm, lw or ell")->required();
  est->add_option("--out", estimate_out, "Output CSV path for the estimate")->required();
  est->add_flag("--transpose", transpose, "Input file is variable-major");

  // oracle
  Eigen::Index oracle_p = 0;
  Eigen::Index oracle_n = 0;
  double oracle_gamma = 1.0;
  double oracle_kappa = 0.0;
  double oracle_eta = 1.0;
  auto* oracle = app.add_subcommand("oracle", "Print closed-form oracle shrinkage");
  oracle->add_option("--p", oracle_p, "Dimension")->required();
  oracle->add_option("--n", oracle_n, "Sample count")->required();
  oracle->add_option("--gamma", oracle_gamma, "Sphericity (>= 1)")->required();
  oracle->add_option("--kappa", oracle_kappa, "Elliptical kurtosis")->required();
  oracle->add_option("--eta", oracle_eta, "Scale (default 1.0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ellshrink::kExitUsage;
  }

  if (bench->parsed()) {
    return ellshrink::cmd_bench(config_path, bench_out, workers, std::cout, std::cerr);
  }
  if (est->parsed()) {
    return ellshrink::cmd_estimate(data_path, method, estimate_out, transpose, std::cout,
                                   std::cerr);
  }
  return ellshrink::cmd_oracle(oracle_p, oracle_n, oracle_gamma, oracle_kappa, oracle_eta,
                               std::cout, std::cerr);
}
