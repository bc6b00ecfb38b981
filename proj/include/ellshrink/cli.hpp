#pragma once

#include <Eigen/Core>
#include <ostream>
#include <string>

namespace ellshrink {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Run every scenario in the config file and write one CSV to out_path.
/// ELLSHRINK_SEED, when set, overrides each scenario's master_seed.
int cmd_bench(const std::string& config_path, const std::string& out_path,
              unsigned workers, std::ostream& out, std::ostream& err);

/// Estimate a covariance matrix from a CSV of observations; writes the
/// estimate to out_path and prints sample diagnostics.
int cmd_estimate(const std::string& data_path, const std::string& method,
                 const std::string& out_path, bool transpose, std::ostream& out,
                 std::ostream& err);

/// Print the closed-form oracle quantities for given population
/// parameters.
int cmd_oracle(Eigen::Index p, Eigen::Index n, double gamma, double kappa, double eta,
               std::ostream& out, std::ostream& err);

}  // namespace ellshrink
