#include "levysim/integrators.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "levysim/csv.hpp"
#include "levysim/errors.hpp"

namespace levysim {

void SchemeConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be > 0");
  if (!(t_end > 0.0) || !std::isfinite(t_end))
    throw ConfigError("t_end must be > 0");
  if (!(fixed_point_tol > 0.0)) throw ConfigError("fixed_point_tol must be > 0");
  if (fixed_point_max_iters < 1)
    throw ConfigError("fixed_point_max_iters must be >= 1");
  if (record_every < 1) throw ConfigError("record_every must be >= 1");
}

void TrajectoryRecord::write_csv(std::ostream& os) const {
  const std::size_t n = states.empty() ? 1 : states.front().dim();
  os << "t";
  for (std::size_t i = 1; i <= n; ++i) os << ",P_" << i;
  for (std::size_t i = 1; i <= n; ++i) os << ",Q_" << i;
  os << ",H0,jump_flag\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    os << format_value(times[k]);
    for (double v : states[k].p) os << ',' << format_value(v);
    for (double v : states[k].q) os << ',' << format_value(v);
    os << ',';
    if (has_hamiltonians()) os << format_value(hamiltonians[k]);
    os << ',' << (jump_flags[k] ? 1 : 0) << '\n';
  }
}

State ses_drift_step(const HamiltonianSystem& sys, const State& s, double dt,
                     double tol, int max_iters) {
  if (dt == 0.0) return s;
  State work{s.p, s.q};  // q fixed at the old value during the P solve
  std::vector<double> next(sys.n);
  bool converged = false;
  double residual = 0.0;
  int used = 0;
  for (int iter = 0; iter < max_iters; ++iter) {
    const std::vector<double> f = sys.drift_grad_q(work);
    residual = 0.0;
    for (std::size_t i = 0; i < sys.n; ++i) {
      next[i] = s.p[i] - f[i] * dt;
      residual = std::max(residual, std::abs(next[i] - work.p[i]));
    }
    work.p = next;
    used = iter + 1;
    if (residual < tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw SolverError("fixed-point iteration did not converge", used, residual);
  const std::vector<double> g = sys.drift_grad_p(work);
  State out;
  out.p = work.p;
  out.q = s.q;
  for (std::size_t i = 0; i < sys.n; ++i) out.q[i] += g[i] * dt;
  return out;
}

State eem_drift_step(const HamiltonianSystem& sys, const State& s, double dt) {
  const std::vector<double> f = sys.drift_grad_q(s);
  const std::vector<double> g = sys.drift_grad_p(s);
  State out = s;
  for (std::size_t i = 0; i < sys.n; ++i) {
    out.p[i] -= f[i] * dt;
    out.q[i] += g[i] * dt;
  }
  return out;
}

namespace {

State drift_step(const HamiltonianSystem& sys, const State& s, double dt,
                 const SchemeConfig& cfg) {
  return cfg.scheme == Scheme::SemiImplicitEuler
             ? ses_drift_step(sys, s, dt, cfg.fixed_point_tol,
                              cfg.fixed_point_max_iters)
             : eem_drift_step(sys, s, dt);
}

class Recorder {
 public:
  Recorder(TrajectoryRecord& rec, const HamiltonianSystem& sys)
      : rec_(rec), sys_(sys) {}

  void push(double t, const State& s, bool jump_flag) {
    rec_.times.push_back(t);
    rec_.states.push_back(s);
    rec_.jump_flags.push_back(jump_flag);
    if (sys_.hamiltonian) rec_.hamiltonians.push_back(sys_.hamiltonian(s));
  }

 private:
  TrajectoryRecord& rec_;
  const HamiltonianSystem& sys_;
};

}  // namespace

TrajectoryRecord integrate(const HamiltonianSystem& sys, const State& x0,
                           const LevyPath& path, const SchemeConfig& cfg) {
  cfg.validate();
  if (!x0.finite() || x0.dim() != sys.n)
    throw DomainError("initial state invalid for this system");
  if (path.horizon() < cfg.t_end * (1.0 - 1e-12))
    throw DomainError("path horizon shorter than t_end");
  if (sys.jump_field)
    throw CapabilityError(
        "time stepping accepts additive-noise systems only");
  if (path.channel_count() != sys.noise.size())
    throw DomainError("path channel count does not match the system");

  TrajectoryRecord rec;
  if (cfg.dt > step_size_bound(sys)) {
    rec.step_bound_warning = true;
    std::cerr << "warning: dt=" << cfg.dt
              << " exceeds the mean-square step bound "
              << step_size_bound(sys) << "\n";
  }

  const double t_end = cfg.t_end;
  const double tiny = 1e-12 * std::max(1.0, t_end);
  const std::vector<JumpEvent> events = path.merged_events(0.0, t_end);

  Recorder out(rec, sys);
  State s = x0;
  double t = 0.0;
  out.push(t, s, false);
  std::size_t e = 0;
  long drift_count = 0;

  while (t < t_end - tiny) {
    const double next_event =
        e < events.size() ? events[e].time : t_end + 1.0;
    const double stop = std::min(next_event, t_end);

    // Drift along the fixed grid up to the next jump or the end.
    while (t < stop - tiny) {
      double next_grid = cfg.dt * (std::floor(t / cfg.dt) + 1.0);
      if (next_grid <= t + tiny) next_grid += cfg.dt;
      const double target = std::min(next_grid, stop);
      const double h = target - t;
      try {
        s = drift_step(sys, s, h, cfg);
      } catch (SolverError& err) {
        err.at_time = t;
        throw;
      }
      if (!s.finite())
        throw DivergenceError("state diverged during drift step", 0, t);
      t = target;
      ++drift_count;
      const bool at_jump = std::abs(t - next_event) <= tiny;
      const bool at_end = std::abs(t - t_end) <= tiny;
      if (at_jump || at_end || drift_count % cfg.record_every == 0)
        out.push(t, s, false);
    }

    // Apply every event scheduled at this instant (channel order on ties).
    while (e < events.size() && events[e].time <= stop + tiny) {
      s = apply_jump(sys, s, events[e], cfg.marcus);
      t = events[e].time;
      out.push(t, s, true);
      ++e;
    }
  }

  return rec;
}

Matrix one_step_jacobian(const HamiltonianSystem& sys, const State& s,
                         double dt, Scheme scheme) {
  SchemeConfig cfg;
  cfg.scheme = scheme;
  const double h = 1e-6;
  const std::size_t d = 2 * sys.n;
  Matrix jac(d, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j) {
    State lo = s, hi = s;
    (j < sys.n ? hi.p[j] : hi.q[j - sys.n]) += h;
    (j < sys.n ? lo.p[j] : lo.q[j - sys.n]) -= h;
    const State fhi = drift_step(sys, hi, dt, cfg);
    const State flo = drift_step(sys, lo, dt, cfg);
    for (std::size_t i = 0; i < sys.n; ++i) {
      jac[i][j] = (fhi.p[i] - flo.p[i]) / (2.0 * h);
      jac[sys.n + i][j] = (fhi.q[i] - flo.q[i]) / (2.0 * h);
    }
  }
  return jac;
}

Matrix oscillator_jacobian(Scheme scheme, double dt) {
  if (scheme == Scheme::SemiImplicitEuler)
    return {{1.0, -dt}, {dt, 1.0 - dt * dt}};
  return {{1.0, -dt}, {dt, 1.0}};
}

}  // namespace levysim
