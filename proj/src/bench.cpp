#include "ellshrink/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ellshrink/oracle.hpp"
#include "ellshrink/parallel.hpp"
#include "ellshrink/shrinkage.hpp"
#include "ellshrink/statistics.hpp"

namespace ellshrink {

CovarianceModel make_covariance(const CovarianceSpec& spec) {
  if (const auto* ar1 = std::get_if<Ar1Spec>(&spec)) {
    return make_ar1(ar1->p, ar1->rho);
  }
  return make_spiked(std::get<SpikedSpec>(spec).blocks);
}

std::string_view estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::Scm:
      return "SCM";
    case EstimatorKind::Lw:
      return "LW";
    case EstimatorKind::Ell:
      return "Ell";
    case EstimatorKind::OracleEll:
      return "OracleEll";
  }
  return "?";
}

std::optional<EstimatorKind> parse_estimator(std::string_view name) {
  if (name == "SCM") return EstimatorKind::Scm;
  if (name == "LW") return EstimatorKind::Lw;
  if (name == "Ell") return EstimatorKind::Ell;
  if (name == "OracleEll") return EstimatorKind::OracleEll;
  return std::nullopt;
}

double nmse_sample(const Eigen::MatrixXd& estimate, const CovarianceModel& model) {
  if (estimate.rows() != model.dim() || estimate.cols() != model.dim()) {
    std::ostringstream msg;
    msg << "nmse_sample: estimate is " << estimate.rows() << "x" << estimate.cols()
        << " but model dimension is " << model.dim();
    throw DimensionMismatch(msg.str());
  }
  return (estimate - model.matrix()).squaredNorm() / model.matrix().squaredNorm();
}

DataMatrix make_trial_data(const CovarianceModel& model, const FamilySpec& family,
                           Eigen::Index n, std::uint64_t master_seed, std::uint64_t trial) {
  RngStream rng(master_seed, trial);
  if (family.family == Family::Gaussian) {
    return sample_gaussian(model, n, rng);
  }
  return sample_student_t(model, family.nu, n, rng);
}

namespace {

struct TrialCell {
  double nmse = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

// Mean and standard error over trials, reduced in trial order so the
// result does not depend on worker scheduling.
void reduce_cells(const std::vector<TrialCell>& cells, BenchRecord& record) {
  const auto trials = static_cast<double>(cells.size());
  double sum_nmse = 0.0, sum_alpha = 0.0, sum_beta = 0.0;
  for (const auto& cell : cells) {
    sum_nmse += cell.nmse;
    sum_alpha += cell.alpha;
    sum_beta += cell.beta;
  }
  record.mean_nmse = sum_nmse / trials;
  record.mean_alpha = sum_alpha / trials;
  record.mean_beta = sum_beta / trials;

  double ss = 0.0;
  for (const auto& cell : cells) {
    const double d = cell.nmse - record.mean_nmse;
    ss += d * d;
  }
  record.se_nmse =
      cells.size() > 1 ? std::sqrt(ss / (trials - 1.0)) / std::sqrt(trials) : 0.0;
}

}  // namespace

std::vector<BenchRecord> run_scenario(const ScenarioConfig& config, unsigned workers) {
  if (config.n_values.empty()) {
    throw DomainError("run_scenario: n_values must be nonempty");
  }
  if (config.trials < 1) {
    throw DomainError("run_scenario: trials must be >= 1");
  }
  if (config.estimators.empty()) {
    throw DomainError("run_scenario: estimators must be nonempty");
  }
  const CovarianceModel model = make_covariance(config.covariance);
  const auto n_estimators = config.estimators.size();
  const auto trials = static_cast<std::size_t>(config.trials);

  std::vector<BenchRecord> records;
  records.reserve(config.n_values.size() * n_estimators);

  for (const Eigen::Index n : config.n_values) {
    if (n < 1) {
      throw DomainError("run_scenario: sample sizes must be >= 1");
    }
    ShrinkageParams oracle_params;
    double oracle_bound = 0.0;

    // cells[estimator][trial]
    std::vector<std::vector<TrialCell>> cells(n_estimators,
                                              std::vector<TrialCell>(trials));
    try {
      const double kappa_true =
          elliptical_kurtosis(config.family.family, config.family.nu);
      oracle_params = oracle_params_elliptical(model, kappa_true, n);
      oracle_bound = optimal_nmse(model, oracle_params.beta);
      parallel_for(0, trials, workers, [&](std::size_t trial) {
        const DataMatrix x = make_trial_data(model, config.family, n,
                                             config.master_seed, trial);
        const Eigen::MatrixXd s = scm(x);
        for (std::size_t e = 0; e < n_estimators; ++e) {
          ShrinkageParams params;
          switch (config.estimators[e]) {
            case EstimatorKind::Scm:
              params = ShrinkageParams(0.0, 1.0);
              break;
            case EstimatorKind::Lw:
              params = lw_params(x, config.lw_eta2_factor);
              break;
            case EstimatorKind::Ell:
              params = ell_params(x);
              break;
            case EstimatorKind::OracleEll:
              params = oracle_params;
              break;
          }
          TrialCell& cell = cells[e][trial];
          cell.nmse = nmse_sample(rscm(s, params), model);
          cell.alpha = params.alpha;
          cell.beta = params.beta;
        }
      });
    } catch (const std::exception& err) {
      std::ostringstream msg;
      msg << "scenario '" << config.name << "', n = " << n << ": " << err.what();
      throw Error(msg.str());
    }

    for (std::size_t e = 0; e < n_estimators; ++e) {
      BenchRecord record;
      record.scenario = config.name;
      record.estimator = std::string(estimator_name(config.estimators[e]));
      record.p = model.dim();
      record.n = n;
      record.trials = config.trials;
      record.oracle_nmse_bound = oracle_bound;
      reduce_cells(cells[e], record);
      records.push_back(std::move(record));
    }
  }
  return records;
}

namespace {

void append_real(std::string& out, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  out += buf;
}

}  // namespace

std::string csv_string(const std::vector<BenchRecord>& records) {
  std::vector<const BenchRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) {
    sorted.push_back(&r);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const BenchRecord* a, const BenchRecord* b) {
                     if (a->scenario != b->scenario) return a->scenario < b->scenario;
                     if (a->estimator != b->estimator) return a->estimator < b->estimator;
                     return a->n < b->n;
                   });

  std::string out =
      "scenario,estimator,p,n,trials,mean_nmse,se_nmse,mean_beta,mean_alpha,"
      "oracle_nmse_bound\n";
  for (const BenchRecord* r : sorted) {
    out += r->scenario;
    out += ',';
    out += r->estimator;
    out += ',';
    out += std::to_string(r->p);
    out += ',';
    out += std::to_string(r->n);
    out += ',';
    out += std::to_string(r->trials);
    out += ',';
    append_real(out, r->mean_nmse);
    out += ',';
    append_real(out, r->se_nmse);
    out += ',';
    append_real(out, r->mean_beta);
    out += ',';
    append_real(out, r->mean_alpha);
    out += ',';
    append_real(out, r->oracle_nmse_bound);
    out += '\n';
  }
  return out;
}

void write_csv(const std::vector<BenchRecord>& records, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("write_csv: cannot open '" + path + "' for writing");
  }
  const std::string content = csv_string(records);
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!file) {
    throw IoError("write_csv: write to '" + path + "' failed");
  }
}

std::uint64_t matrix_hash(const Eigen::MatrixXd& m) {
  std::uint64_t hash = 1469598103934665603ULL;
  const auto mix = [&hash](std::uint64_t value) {
    for (int shift = 0; shift < 64; shift += 8) {
      hash ^= (value >> shift) & 0xffULL;
      hash *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(m.rows()));
  mix(static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      std::uint64_t bits = 0;
      std::memcpy(&bits, &m(i, j), sizeof(bits));
      mix(bits);
    }
  }
  return hash;
}

}  // namespace ellshrink
