#include "levysim/oracle_oscillator.hpp"

#include <cmath>

#include "levysim/errors.hpp"

namespace levysim {

namespace {

State evaluate(const OscillatorParams& params, const LevyPath& path, double t,
               bool include_jump_at_t) {
  if (t < 0.0 || t > path.horizon()) throw DomainError("time outside [0, T]");
  // Rotation of the initial condition plus rotated jump impulses. Each
  // jump enters through P (cos factor), so at the jump instant P gains
  // beta*R and Q is continuous.
  const double c = std::cos(t);
  const double s = std::sin(t);
  double p = params.p0 * c - params.q0 * s;
  double q = params.p0 * s + params.q0 * c;
  const auto times = path.jump_times(0);
  const auto sizes = path.jump_sizes(0);
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] > t || (!include_jump_at_t && times[k] == t)) break;
    const double lag = t - times[k];
    p += params.beta * std::cos(lag) * sizes[k];
    q += params.beta * std::sin(lag) * sizes[k];
  }
  return State{{p}, {q}};
}

}  // namespace

State exact_state(const OscillatorParams& params, const LevyPath& path,
                  double t) {
  return evaluate(params, path, t, /*include_jump_at_t=*/true);
}

State exact_state_left(const OscillatorParams& params, const LevyPath& path,
                       double t) {
  return evaluate(params, path, t, /*include_jump_at_t=*/false);
}

double exact_hamiltonian(const OscillatorParams& params, const LevyPath& path,
                         double t) {
  const State x = exact_state(params, path, t);
  return 0.5 * (x.p[0] * x.p[0] + x.q[0] * x.q[0]);
}

}  // namespace levysim
