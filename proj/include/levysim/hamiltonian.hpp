#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace levysim {

// A phase point: momenta and positions, each of dimension n.
struct State {
  std::vector<double> p;
  std::vector<double> q;

  std::size_t dim() const { return p.size(); }
  bool finite() const;
};

// A single additive noise channel: the two partial-gradient maps of its
// noise Hamiltonian, as functions of time only.
struct NoiseChannel {
  std::function<std::vector<double>(double t)> grad_q;  // dH_r/dQ
  std::function<std::vector<double>(double t)> grad_p;  // dH_r/dP
};

// Hamiltonian system given through partial-gradient callbacks. Callbacks
// must be pure; the struct is treated as immutable after construction.
struct HamiltonianSystem {
  std::size_t n = 1;

  std::function<std::vector<double>(const State&)> drift_grad_q;  // dH0/dQ
  std::function<std::vector<double>(const State&)> drift_grad_p;  // dH0/dP

  std::vector<NoiseChannel> noise;

  // User-asserted Lipschitz bound for the drift gradients; feeds the
  // step-size validation, never estimated automatically.
  double lipschitz_K = 1.0;

  // Optional: H0 itself, for energy diagnostics.
  std::function<double(const State&)> hamiltonian;

  // Optional state-dependent jump field V_r(x) = (-dH_r/dQ, dH_r/dP),
  // returned as the (dp/ds, dq/ds) pair. When set, the jump map integrates
  // the auxiliary ODE numerically; when absent the additive closed form is
  // used. The time-stepping schemes accept additive systems only.
  std::function<State(std::size_t channel, const State&)> jump_field;
};

// The linear stochastic oscillator: H0 = (p^2 + q^2)/2, one noise channel
// with H_1 = -beta * q. The noise gradient in Q is the constant -beta, so
// each unit jump translates P by +beta (the P-equation subtracts the
// Q-gradient of the noise Hamiltonian).
HamiltonianSystem make_linear_oscillator(double beta);

// H0 at a state; throws CapabilityError when the system carries no
// Hamiltonian callback.
double hamiltonian_value(const HamiltonianSystem& sys, const State& s);

// Largest step size for which 8*sqrt(2)*K^2*dt^2 < 1 holds, the mean-square
// stability hypothesis of the semi-implicit scheme.
double step_size_bound(const HamiltonianSystem& sys);

}  // namespace levysim
