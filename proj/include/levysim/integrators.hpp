#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "levysim/hamiltonian.hpp"
#include "levysim/levy_path.hpp"
#include "levysim/linalg.hpp"
#include "levysim/marcus_flow.hpp"

namespace levysim {

enum class Scheme {
  SemiImplicitEuler,  // P implicit against old Q, then Q with the new P
  ExplicitEuler,      // both updates from the old state
};

struct SchemeConfig {
  Scheme scheme = Scheme::SemiImplicitEuler;
  double dt = 0.08;          // maximum drift step
  double t_end = 20.0;
  double fixed_point_tol = 1e-12;
  int fixed_point_max_iters = 50;
  int record_every = 1;      // thinning of drift-step records
  MarcusOptions marcus{};

  void validate() const;
};

// Time-stamped trajectory. Jump applications produce two entries at the
// same time stamp: the left limit, then the post-jump state flagged true.
// Times are therefore non-decreasing, with equal adjacent entries only at
// jumps.
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<double> hamiltonians;  // empty when H0 unavailable
  std::vector<bool> jump_flags;      // true on post-jump entries
  bool step_bound_warning = false;   // dt exceeded the mean-square bound

  bool has_hamiltonians() const { return !hamiltonians.empty(); }
  const State& final_state() const { return states.back(); }

  // Columns: t, P_1..P_n, Q_1..Q_n, H0, jump_flag. H0 column is empty
  // when unavailable.
  void write_csv(std::ostream& os) const;
};

// One drift step of the semi-implicit scheme: solve P+ = P - dH0/dQ(P+, Q)*dt
// by fixed-point iteration (initial guess P), then Q+ = Q + dH0/dP(P+, Q)*dt.
// Throws SolverError on non-convergence.
State ses_drift_step(const HamiltonianSystem& sys, const State& s, double dt,
                     double tol = 1e-12, int max_iters = 50);

// One explicit Euler drift step; both updates use the old state.
State eem_drift_step(const HamiltonianSystem& sys, const State& s, double dt);

// Jump-adapted integration: drift steps on the fixed grid {k*dt} refined by
// the exact jump times of the path, jumps applied to the left-limit state
// via the Marcus map. Records per cfg.record_every, always immediately
// before and after each jump, and at 0 and t_end.
TrajectoryRecord integrate(const HamiltonianSystem& sys, const State& x0,
                           const LevyPath& path, const SchemeConfig& cfg);

// Jacobian of the drift-step map at s, by central finite differences with
// perturbation 1e-6. Coordinate order (P, Q).
Matrix one_step_jacobian(const HamiltonianSystem& sys, const State& s,
                         double dt, Scheme scheme);

// Closed-form drift-step Jacobian of the linear oscillator (state
// independent). SES: [[1, -dt], [dt, 1-dt^2]]; EEM: [[1, -dt], [dt, 1]].
Matrix oscillator_jacobian(Scheme scheme, double dt);

}  // namespace levysim
