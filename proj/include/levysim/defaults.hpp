#pragma once

#include <cstdint>

namespace levysim {

// Shipped experiment defaults: oscillator with beta=1, noise intensity 5,
// jump-size sigma 0.2, horizon 20, dt 0.08.
inline constexpr double kDefaultBeta = 1.0;
inline constexpr double kDefaultIntensity = 5.0;
inline constexpr double kDefaultJumpSigma = 0.2;
inline constexpr double kDefaultHorizon = 20.0;
inline constexpr double kDefaultDt = 0.08;
inline constexpr std::uint64_t kDefaultSeed = 18;

}  // namespace levysim
