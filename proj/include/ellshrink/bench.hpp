#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ellshrink/sampling.hpp"
#include "ellshrink/types.hpp"

namespace ellshrink {

struct Ar1Spec {
  Eigen::Index p = 0;
  double rho = 0.0;
};

struct SpikedSpec {
  std::vector<SpikedBlock> blocks;
};

using CovarianceSpec = std::variant<Ar1Spec, SpikedSpec>;

/// Instantiate the covariance factory a scenario names.
CovarianceModel make_covariance(const CovarianceSpec& spec);

struct FamilySpec {
  Family family = Family::Gaussian;
  double nu = 0.0;  // StudentT only
};

enum class EstimatorKind { Scm, Lw, Ell, OracleEll };

std::string_view estimator_name(EstimatorKind kind);
std::optional<EstimatorKind> parse_estimator(std::string_view name);

/// One Monte Carlo experiment: a covariance factory, a sampling family,
/// a grid of sample sizes, and the estimators to evaluate on shared
/// per-trial data.
struct ScenarioConfig {
  std::string name;
  CovarianceSpec covariance;
  FamilySpec family;
  std::vector<Eigen::Index> n_values;
  Eigen::Index trials = 1;
  std::uint64_t master_seed = 0;
  std::vector<EstimatorKind> estimators;
  bool lw_eta2_factor = true;
};

/// One (scenario, estimator, n) cell of averaged NMSE results.
struct BenchRecord {
  std::string scenario;
  std::string estimator;
  Eigen::Index p = 0;
  Eigen::Index n = 0;
  Eigen::Index trials = 0;
  double mean_nmse = 0.0;
  double se_nmse = 0.0;
  double mean_beta = 0.0;
  double mean_alpha = 0.0;
  double oracle_nmse_bound = 0.0;
};

/// Empirical normalized squared error ||estimate - M||_F^2 / ||M||_F^2.
double nmse_sample(const Eigen::MatrixXd& estimate, const CovarianceModel& model);

/// The data matrix of one benchmark trial. run_scenario draws trial t
/// from stream (master_seed, t), so the data a trial sees depends only on
/// these arguments; every estimator within the trial shares it.
DataMatrix make_trial_data(const CovarianceModel& model, const FamilySpec& family,
                           Eigen::Index n, std::uint64_t master_seed, std::uint64_t trial);

/// Run every (n, estimator) cell of one scenario. Output is bit-identical
/// for a fixed master_seed regardless of worker count (0 = hardware
/// default). Estimator failures abort with (scenario, n, trial) context.
std::vector<BenchRecord> run_scenario(const ScenarioConfig& config, unsigned workers = 0);

/// Write records as CSV, sorted by (scenario, estimator, n), reals with
/// 17 significant digits.
void write_csv(const std::vector<BenchRecord>& records, const std::string& path);

/// Render the CSV content (used by write_csv; byte-stable).
std::string csv_string(const std::vector<BenchRecord>& records);

/// Parse a benchmark config document (JSON object with a "scenarios"
/// array; // comments allowed). Throws ConfigError with field context.
std::vector<ScenarioConfig> load_config(const std::string& path);
std::vector<ScenarioConfig> parse_config(const std::string& text,
                                         const std::string& origin = "<config>");

/// FNV-1a hash of a matrix's content bytes; test hook for the shared
/// per-trial data contract.
std::uint64_t matrix_hash(const Eigen::MatrixXd& m);

}  // namespace ellshrink
