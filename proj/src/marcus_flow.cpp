#include "levysim/marcus_flow.hpp"

#include <cmath>
#include <string>

#include "levysim/errors.hpp"

namespace levysim {

namespace {

void check_event(const HamiltonianSystem& sys, const State& s,
                 const JumpEvent& ev) {
  if (!s.finite()) throw DomainError("left-limit state is not finite");
  if (s.dim() != sys.n) throw DomainError("state dimension mismatch");
  if (!(ev.time > 0.0) || !std::isfinite(ev.time) || !std::isfinite(ev.size))
    throw DomainError("invalid jump event");
  if (!sys.jump_field && ev.channel >= sys.noise.size())
    throw DomainError("jump channel out of range");
}

// Field of the auxiliary ODE: d(xi)/ds = V_r(xi) * l.
State field_times_size(const HamiltonianSystem& sys, const JumpEvent& ev,
                       const State& x) {
  State v = sys.jump_field(ev.channel, x);
  for (double& e : v.p) e *= ev.size;
  for (double& e : v.q) e *= ev.size;
  return v;
}

State axpy(const State& x, double a, const State& d) {
  State y = x;
  for (std::size_t i = 0; i < y.p.size(); ++i) y.p[i] += a * d.p[i];
  for (std::size_t i = 0; i < y.q.size(); ++i) y.q[i] += a * d.q[i];
  return y;
}

State rk4_unit_flow(const HamiltonianSystem& sys, const State& x0,
                    const JumpEvent& ev, std::size_t substeps) {
  const double h = 1.0 / static_cast<double>(substeps);
  State x = x0;
  for (std::size_t step = 0; step < substeps; ++step) {
    const State k1 = field_times_size(sys, ev, x);
    const State k2 = field_times_size(sys, ev, axpy(x, 0.5 * h, k1));
    const State k3 = field_times_size(sys, ev, axpy(x, 0.5 * h, k2));
    const State k4 = field_times_size(sys, ev, axpy(x, h, k3));
    for (std::size_t i = 0; i < x.p.size(); ++i)
      x.p[i] += h / 6.0 * (k1.p[i] + 2.0 * k2.p[i] + 2.0 * k3.p[i] + k4.p[i]);
    for (std::size_t i = 0; i < x.q.size(); ++i)
      x.q[i] += h / 6.0 * (k1.q[i] + 2.0 * k2.q[i] + 2.0 * k3.q[i] + k4.q[i]);
    if (!x.finite())
      throw DivergenceError("jump flow diverged at substep " +
                                std::to_string(step),
                            step, ev.time);
  }
  return x;
}

}  // namespace

State apply_jump(const HamiltonianSystem& sys, const State& left_limit,
                 const JumpEvent& ev, const MarcusOptions& opts) {
  check_event(sys, left_limit, ev);
  if (sys.jump_field) return rk4_unit_flow(sys, left_limit, ev, opts.substeps);
  // Additive channel: the field is constant, the unit-time flow is the
  // exact translation.
  const NoiseChannel& ch = sys.noise[ev.channel];
  const std::vector<double> gq = ch.grad_q(ev.time);
  const std::vector<double> gp = ch.grad_p(ev.time);
  State out = left_limit;
  for (std::size_t i = 0; i < sys.n; ++i) {
    out.p[i] -= gq[i] * ev.size;
    out.q[i] += gp[i] * ev.size;
  }
  return out;
}

MarcusIncrement marcus_increment(const HamiltonianSystem& sys,
                                 const State& left_limit, const JumpEvent& ev,
                                 const MarcusOptions& opts) {
  MarcusIncrement out;
  out.state = apply_jump(sys, left_limit, ev, opts);
  out.correction.assign(2 * sys.n, 0.0);
  if (!sys.jump_field) return out;  // constant field: flow(x) = x + V*l

  // flow(x) - x - V(x)*l, laid out as (P part, Q part).
  const State vl = field_times_size(sys, ev, left_limit);
  for (std::size_t i = 0; i < sys.n; ++i) {
    out.correction[i] = out.state.p[i] - left_limit.p[i] - vl.p[i];
    out.correction[sys.n + i] = out.state.q[i] - left_limit.q[i] - vl.q[i];
  }
  return out;
}

}  // namespace levysim
