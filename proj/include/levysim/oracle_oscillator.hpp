#pragma once

#include "levysim/hamiltonian.hpp"
#include "levysim/levy_path.hpp"

namespace levysim {

struct OscillatorParams {
  double beta = 1.0;
  double p0 = 0.0;
  double q0 = 1.0;
};

// Closed-form solution of the linear stochastic oscillator on a realized
// path (channel 0): a rotation of the initial condition plus a finite sum
// of rotated jump contributions. A jump exactly at t is included (cadlag).
// Throws DomainError for t outside [0, horizon].
State exact_state(const OscillatorParams& params, const LevyPath& path,
                  double t);

// Left limit at t: jumps strictly before t only.
State exact_state_left(const OscillatorParams& params, const LevyPath& path,
                       double t);

// H0 = (P^2 + Q^2)/2 evaluated on the exact solution.
double exact_hamiltonian(const OscillatorParams& params, const LevyPath& path,
                         double t);

}  // namespace levysim
