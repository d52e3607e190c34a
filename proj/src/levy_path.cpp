#include "levysim/levy_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levysim/csv.hpp"
#include "levysim/errors.hpp"
#include "levysim/rng.hpp"

namespace levysim {

void LevyConfig::validate() const {
  if (!(intensity > 0.0) || !std::isfinite(intensity))
    throw ConfigError("intensity must be positive and finite");
  if (!(jump_size_sigma > 0.0) || !std::isfinite(jump_size_sigma))
    throw ConfigError("jump_size_sigma must be positive and finite");
  if (channels < 1) throw ConfigError("channels must be >= 1");
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw ConfigError("horizon must be positive and finite");
  if (brownian_coefficient != 0.0)
    throw ConfigError(
        "brownian_coefficient must be 0; the diffusive part is unsupported");
}

LevyPath LevyPath::sample(const LevyConfig& config) {
  config.validate();
  LevyPath path;
  path.config_ = config;
  path.times_.resize(config.channels);
  path.sizes_.resize(config.channels);
  RandomStream rng(config.seed);
  for (std::size_t r = 0; r < config.channels; ++r) {
    double t = 0.0;
    for (;;) {
      t += rng.exponential(config.intensity);
      if (t > config.horizon) break;
      path.times_[r].push_back(t);
      path.sizes_[r].push_back(rng.normal(config.jump_size_sigma));
    }
  }
  return path;
}

LevyPath LevyPath::empty(double horizon, std::size_t channels) {
  LevyPath path;
  path.config_.horizon = horizon;
  path.config_.channels = channels;
  path.times_.resize(channels);
  path.sizes_.resize(channels);
  path.config_.validate();
  return path;
}

LevyPath LevyPath::from_events(
    double horizon, std::vector<std::vector<JumpEvent>> per_channel) {
  LevyPath path;
  path.config_.horizon = horizon;
  path.config_.channels = per_channel.empty() ? 1 : per_channel.size();
  path.config_.validate();
  path.times_.resize(path.config_.channels);
  path.sizes_.resize(path.config_.channels);
  for (std::size_t r = 0; r < per_channel.size(); ++r) {
    double prev = 0.0;
    for (const JumpEvent& ev : per_channel[r]) {
      if (!(ev.time > prev) || ev.time > horizon)
        throw ConfigError(
            "jump times must be strictly increasing within (0, T]");
      if (!std::isfinite(ev.size)) throw ConfigError("jump size must be finite");
      path.times_[r].push_back(ev.time);
      path.sizes_[r].push_back(ev.size);
      prev = ev.time;
    }
  }
  return path;
}

namespace {
void check_channel(const LevyPath& path, std::size_t channel) {
  if (channel >= path.channel_count())
    throw DomainError("channel index out of range");
}
}  // namespace

double LevyPath::value(std::size_t channel, double t) const {
  check_channel(*this, channel);
  if (t < 0.0 || t > config_.horizon)
    throw DomainError("time outside [0, T]");
  const auto& ts = times_[channel];
  const auto& rs = sizes_[channel];
  // cadlag: jumps with time <= t count.
  const auto end = std::upper_bound(ts.begin(), ts.end(), t);
  double sum = 0.0;
  for (auto it = ts.begin(); it != end; ++it)
    sum += rs[static_cast<std::size_t>(it - ts.begin())];
  return sum;
}

std::vector<JumpEvent> LevyPath::jumps_in(std::size_t channel, double t0,
                                          double t1) const {
  check_channel(*this, channel);
  if (!(t0 < t1) || t0 < 0.0 || t1 > config_.horizon)
    throw DomainError("require 0 <= t0 < t1 <= T");
  const auto& ts = times_[channel];
  const auto& rs = sizes_[channel];
  // left-open, right-closed: t0 < time <= t1.
  const auto first = std::upper_bound(ts.begin(), ts.end(), t0);
  const auto last = std::upper_bound(ts.begin(), ts.end(), t1);
  std::vector<JumpEvent> out;
  out.reserve(static_cast<std::size_t>(last - first));
  for (auto it = first; it != last; ++it) {
    const auto k = static_cast<std::size_t>(it - ts.begin());
    out.push_back({channel, ts[k], rs[k]});
  }
  return out;
}

std::vector<JumpEvent> LevyPath::merged_events(double t0, double t1) const {
  std::vector<JumpEvent> all;
  for (std::size_t r = 0; r < channel_count(); ++r) {
    auto chunk = jumps_in(r, t0, t1);
    all.insert(all.end(), chunk.begin(), chunk.end());
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const JumpEvent& a, const JumpEvent& b) {
                     return a.time < b.time;
                   });
  return all;
}

std::span<const double> LevyPath::jump_times(std::size_t channel) const {
  check_channel(*this, channel);
  return times_[channel];
}

std::span<const double> LevyPath::jump_sizes(std::size_t channel) const {
  check_channel(*this, channel);
  return sizes_[channel];
}

void LevyPath::write_csv(std::ostream& os) const {
  os << "channel,jump_index,jump_time,jump_size\n";
  for (std::size_t r = 0; r < channel_count(); ++r) {
    for (std::size_t k = 0; k < times_[r].size(); ++k) {
      os << r << ',' << k << ',' << format_value(times_[r][k]) << ','
         << format_value(sizes_[r][k]) << '\n';
    }
  }
}

}  // namespace levysim
