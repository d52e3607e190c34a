#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace levysim {

// Parameters of the driving compound-Poisson noise.
struct LevyConfig {
  double intensity = 5.0;         // jumps per unit time, > 0
  double jump_size_sigma = 0.2;   // std-dev of normal jump sizes, > 0
  std::size_t channels = 1;       // independent noise channels, >= 1
  double horizon = 20.0;          // path length T, > 0
  std::uint64_t seed = 0;
  double brownian_coefficient = 0.0;  // must be 0; diffusive part unsupported

  void validate() const;  // throws ConfigError
};

struct JumpEvent {
  std::size_t channel = 0;
  double time = 0.0;  // in (0, T]
  double size = 0.0;
};

// One realized compound-Poisson path: per channel, the ordered jump times
// and sizes on (0, T]. Immutable after creation; safe to share across
// threads read-only.
class LevyPath {
 public:
  // Draw a path: waiting times are cumulative Exp(intensity) sums truncated
  // at the horizon, sizes are N(0, sigma^2). Fully determined by the seed.
  // Channels are filled in order from a single stream, so each channel is
  // an independent Poisson stream.
  static LevyPath sample(const LevyConfig& config);

  // A path with no jumps; used for noise-free (deterministic) runs that
  // still need a driving-path argument.
  static LevyPath empty(double horizon, std::size_t channels = 1);

  // Build from explicit events (tests, replay). Events must be strictly
  // increasing in time within each channel.
  static LevyPath from_events(double horizon,
                              std::vector<std::vector<JumpEvent>> per_channel);

  // Path value at t: sum of sizes of jumps with time <= t (cadlag; a jump
  // exactly at t is included). Throws DomainError for t outside [0, T].
  double value(std::size_t channel, double t) const;

  // Jumps with t0 < time <= t1 in time order. Throws DomainError unless
  // 0 <= t0 < t1 <= T.
  std::vector<JumpEvent> jumps_in(std::size_t channel, double t0,
                                  double t1) const;

  // All channels merged, ascending in time; simultaneous jumps (measure
  // zero, but possible with hand-built paths) come out in channel order.
  std::vector<JumpEvent> merged_events(double t0, double t1) const;

  std::span<const double> jump_times(std::size_t channel) const;
  std::span<const double> jump_sizes(std::size_t channel) const;

  const LevyConfig& config() const { return config_; }
  double horizon() const { return config_.horizon; }
  std::size_t channel_count() const { return config_.channels; }

  // Columns: channel, jump_index, jump_time, jump_size.
  void write_csv(std::ostream& os) const;

 private:
  LevyPath() = default;

  LevyConfig config_;
  std::vector<std::vector<double>> times_;  // per channel, strictly increasing
  std::vector<std::vector<double>> sizes_;
};

}  // namespace levysim
