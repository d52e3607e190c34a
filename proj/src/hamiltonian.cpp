#include "levysim/hamiltonian.hpp"

#include <cmath>

#include "levysim/errors.hpp"

namespace levysim {

bool State::finite() const {
  if (p.size() != q.size() || p.empty()) return false;
  for (double v : p)
    if (!std::isfinite(v)) return false;
  for (double v : q)
    if (!std::isfinite(v)) return false;
  return true;
}

HamiltonianSystem make_linear_oscillator(double beta) {
  HamiltonianSystem sys;
  sys.n = 1;
  sys.drift_grad_q = [](const State& s) { return std::vector<double>{s.q[0]}; };
  sys.drift_grad_p = [](const State& s) { return std::vector<double>{s.p[0]}; };
  NoiseChannel ch;
  ch.grad_q = [beta](double) { return std::vector<double>{-beta}; };
  ch.grad_p = [](double) { return std::vector<double>{0.0}; };
  sys.noise.push_back(std::move(ch));
  sys.lipschitz_K = 1.0;
  sys.hamiltonian = [](const State& s) {
    return 0.5 * (s.p[0] * s.p[0] + s.q[0] * s.q[0]);
  };
  return sys;
}

double hamiltonian_value(const HamiltonianSystem& sys, const State& s) {
  if (!sys.hamiltonian)
    throw CapabilityError("system has no Hamiltonian callback");
  return sys.hamiltonian(s);
}

double step_size_bound(const HamiltonianSystem& sys) {
  // dt_max solves 8*sqrt(2)*K^2*dt^2 = 1.
  return 1.0 / (sys.lipschitz_K * std::sqrt(8.0 * std::sqrt(2.0)));
}

}  // namespace levysim
