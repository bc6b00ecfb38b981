#pragma once

#include <cstdint>
#include <random>

namespace ellshrink {

/// Deterministic random stream keyed by (master_seed, stream_index).
///
/// Streams with the same key replay the same sequence; streams with
/// distinct indices are independent for simulation purposes. The
/// benchmark harness assigns one stream per Monte Carlo trial, so a
/// trial's draws do not depend on worker count or execution order.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : master_seed_(master_seed), stream_index_(stream_index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed),
        static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(stream_index),
        static_cast<std::uint32_t>(stream_index >> 32),
    };
    engine_.seed(seq);
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  double normal() { return normal_(engine_); }

  double uniform() { return uniform_(engine_); }

  /// Gamma(shape, scale) deviate; chi^2_nu is gamma(nu/2, 2), which keeps
  /// nu a real parameter.
  double gamma(double shape, double scale) {
    std::gamma_distribution<double> dist(shape, scale);
    return dist(engine_);
  }

  double chi_squared(double dof) { return gamma(0.5 * dof, 2.0); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace ellshrink
