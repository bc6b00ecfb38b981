#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ellshrink/bench.hpp"

namespace ellshrink {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) {
    fail(where, "expected an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(where, "missing required field '" + key + "'");
  }
  return *it;
}

double as_real(const json& value, const std::string& where) {
  if (!value.is_number()) {
    fail(where, "expected a number");
  }
  return value.get<double>();
}

Eigen::Index as_positive_int(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    fail(where, "expected a positive integer");
  }
  return static_cast<Eigen::Index>(value.get<long long>());
}

CovarianceSpec parse_covariance(const json& node, const std::string& where) {
  const json& type_node = require(node, "type", where);
  if (!type_node.is_string()) {
    fail(where + ".type", "expected a string");
  }
  const std::string type = type_node.get<std::string>();
  if (type == "ar1") {
    Ar1Spec spec;
    spec.p = as_positive_int(require(node, "p", where), where + ".p");
    spec.rho = as_real(require(node, "rho", where), where + ".rho");
    return spec;
  }
  if (type == "spiked") {
    const json& blocks = require(node, "blocks", where);
    if (!blocks.is_array() || blocks.empty()) {
      fail(where + ".blocks", "expected a nonempty array of [eigenvalue, multiplicity]");
    }
    SpikedSpec spec;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string entry_where = where + ".blocks[" + std::to_string(i) + "]";
      const json& entry = blocks[i];
      if (!entry.is_array() || entry.size() != 2) {
        fail(entry_where, "expected [eigenvalue, multiplicity]");
      }
      SpikedBlock block;
      block.value = as_real(entry[0], entry_where + "[0]");
      block.multiplicity = as_positive_int(entry[1], entry_where + "[1]");
      spec.blocks.push_back(block);
    }
    return spec;
  }
  fail(where + ".type", "unknown covariance type '" + type + "' (expected ar1 or spiked)");
}

FamilySpec parse_family(const json& node, const std::string& where) {
  const json& type_node = require(node, "type", where);
  if (!type_node.is_string()) {
    fail(where + ".type", "expected a string");
  }
  const std::string type = type_node.get<std::string>();
  FamilySpec spec;
  if (type == "gaussian") {
    spec.family = Family::Gaussian;
    return spec;
  }
  if (type == "student_t") {
    spec.family = Family::StudentT;
    spec.nu = as_real(require(node, "nu", where), where + ".nu");
    if (!(spec.nu > 4.0)) {
      fail(where + ".nu", "student_t requires nu > 4");
    }
    return spec;
  }
  fail(where + ".type", "unknown family '" + type + "' (expected gaussian or student_t)");
}

ScenarioConfig parse_scenario(const json& node, const std::string& where) {
  ScenarioConfig config;
  const json& name = require(node, "name", where);
  if (!name.is_string() || name.get<std::string>().empty()) {
    fail(where + ".name", "expected a nonempty string");
  }
  config.name = name.get<std::string>();
  if (config.name.find(',') != std::string::npos ||
      config.name.find('\n') != std::string::npos) {
    fail(where + ".name", "scenario names must not contain commas or newlines");
  }

  config.covariance = parse_covariance(require(node, "covariance", where), where + ".covariance");
  config.family = parse_family(require(node, "family", where), where + ".family");

  const json& n_values = require(node, "n_values", where);
  if (!n_values.is_array() || n_values.empty()) {
    fail(where + ".n_values", "expected a nonempty array of positive integers");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    config.n_values.push_back(
        as_positive_int(n_values[i], where + ".n_values[" + std::to_string(i) + "]"));
  }

  config.trials = as_positive_int(require(node, "trials", where), where + ".trials");

  const json& seed = require(node, "master_seed", where);
  if (!seed.is_number_integer() || seed.get<long long>() < 0) {
    fail(where + ".master_seed", "expected a nonnegative integer");
  }
  config.master_seed = seed.get<std::uint64_t>();

  const json& estimators = require(node, "estimators", where);
  if (!estimators.is_array() || estimators.empty()) {
    fail(where + ".estimators", "expected a nonempty array of estimator names");
  }
  for (std::size_t i = 0; i < estimators.size(); ++i) {
    const std::string entry_where = where + ".estimators[" + std::to_string(i) + "]";
    if (!estimators[i].is_string()) {
      fail(entry_where, "expected a string");
    }
    const auto kind = parse_estimator(estimators[i].get<std::string>());
    if (!kind) {
      fail(entry_where, "unknown estimator '" + estimators[i].get<std::string>() +
                            "' (expected SCM, LW, Ell or OracleEll)");
    }
    config.estimators.push_back(*kind);
  }

  if (auto it = node.find("lw_eta2_factor"); it != node.end()) {
    if (!it->is_boolean()) {
      fail(where + ".lw_eta2_factor", "expected a boolean");
    }
    config.lw_eta2_factor = it->get<bool>();
  }

  // Surface bad factory parameters (rho range, eigenvalue signs) as
  // config errors now rather than runtime errors later.
  try {
    make_covariance(config.covariance);
  } catch (const DomainError& err) {
    fail(where + ".covariance", err.what());
  }
  return config;
}

}  // namespace

std::vector<ScenarioConfig> parse_config(const std::string& text, const std::string& origin) {
  json document;
  try {
    document = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& err) {
    throw ConfigError(origin + ": " + err.what());
  }
  const json& scenarios = require(document, "scenarios", origin);
  if (!scenarios.is_array() || scenarios.empty()) {
    fail(origin + ".scenarios", "expected a nonempty array");
  }
  std::vector<ScenarioConfig> out;
  out.reserve(scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    out.push_back(
        parse_scenario(scenarios[i], origin + ".scenarios[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<ScenarioConfig> load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), path);
}

}  // namespace ellshrink
