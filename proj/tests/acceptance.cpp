// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs single-threaded at desk scale.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <random>
#include <vector>

#include "levysim/defaults.hpp"
#include "levysim/diagnostics.hpp"
#include "levysim/integrators.hpp"
#include "levysim/levy_path.hpp"
#include "levysim/linalg.hpp"
#include "levysim/oracle_oscillator.hpp"
#include "levysim/rng.hpp"

using namespace levysim;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              name, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// --- 1: endpoint strong error decays with slope 1 ----------------------

void criterion_strong_order() {
  const OscillatorParams params{1.0, 0.0, 1.0};
  LevyConfig noise;
  noise.intensity = 5.0;
  noise.jump_size_sigma = 0.2;
  SchemeConfig base;
  const std::vector<double> steps{0.02, 0.01, 0.005, 0.0025};
  const ConvergenceReport rep =
      convergence_study(params, noise, base, steps, 100, 20.0, kDefaultSeed);
  const bool ok = rep.fitted_slope >= 0.85 && rep.fitted_slope <= 1.15;
  report(1, "strong order 1", ok,
         fmt("fitted slope %.4f, band [0.85, 1.15]", rep.fitted_slope));
}

// --- 2: discrete symplecticity of the drift step -----------------------

void criterion_symplecticity() {
  const HamiltonianSystem sys = make_linear_oscillator(1.0);

  bool analytic_ok = true;
  for (double dt : {0.01, 0.08, 0.2}) {
    const Matrix j = oscillator_jacobian(Scheme::SemiImplicitEuler, dt);
    analytic_ok &= j[0][0] == 1.0 && j[0][1] == -dt && j[1][0] == dt &&
                   j[1][1] == 1.0 - dt * dt;
    analytic_ok &= determinant(j) == 1.0;
  }

  double worst_ses = 0.0, worst_eem = 0.0;
  std::mt19937_64 gen(kDefaultSeed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (double dt : {0.01, 0.08, 0.2}) {
    for (int i = 0; i < 100; ++i) {
      const State s{{dist(gen)}, {dist(gen)}};
      const double det_ses = determinant(
          one_step_jacobian(sys, s, dt, Scheme::SemiImplicitEuler));
      worst_ses = std::max(worst_ses, std::abs(det_ses - 1.0));
      const double det_eem =
          determinant(one_step_jacobian(sys, s, dt, Scheme::ExplicitEuler));
      worst_eem = std::max(worst_eem, std::abs(det_eem - (1.0 + dt * dt)));
    }
  }
  const bool ok = analytic_ok && worst_ses <= 1e-6 && worst_eem <= 1e-9;
  report(2, "discrete symplecticity", ok,
         fmt("analytic det==1: %s, |det-1| ses %.2e (tol 1e-6), "
             "|det-(1+dt^2)| eem %.2e (tol 1e-9)",
             analytic_ok ? "yes" : "no", worst_ses, worst_eem));
}

// --- 3: phase-area preservation ----------------------------------------

void criterion_phase_area() {
  const PhaseDomain circle = circle_domain(0.2, 0.8, 1.0, 256);
  const double area0 = shoelace_area(circle);
  const std::vector<double> times{4.0, 8.0};

  // noise-free: semi-implicit preserves, explicit grows geometrically
  const HamiltonianSystem free_sys = make_linear_oscillator(0.0);
  const LevyPath quiet = LevyPath::empty(10.0);
  SchemeConfig ses_cfg;
  ses_cfg.dt = 0.08;
  SchemeConfig eem_cfg = ses_cfg;
  eem_cfg.scheme = Scheme::ExplicitEuler;

  double worst_ses = 0.0;
  for (const auto& dom : evolve_domain(free_sys, quiet, ses_cfg, circle, times))
    worst_ses =
        std::max(worst_ses, std::abs(shoelace_area(dom) - area0) / area0);

  double worst_eem = 0.0;
  const auto eem_snaps = evolve_domain(free_sys, quiet, eem_cfg, circle, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double want =
        area0 * std::pow(1.0 + eem_cfg.dt * eem_cfg.dt, times[i] / eem_cfg.dt);
    worst_eem = std::max(
        worst_eem, std::abs(shoelace_area(eem_snaps[i]) - want) / want);
  }

  // with jumps: the semi-implicit area is still invariant
  const HamiltonianSystem noisy_sys = make_linear_oscillator(1.0);
  LevyConfig noise;
  noise.horizon = 10.0;
  noise.seed = kDefaultSeed;
  const LevyPath path = LevyPath::sample(noise);
  double worst_jump = 0.0;
  for (const auto& dom : evolve_domain(noisy_sys, path, ses_cfg, circle, times))
    worst_jump =
        std::max(worst_jump, std::abs(shoelace_area(dom) - area0) / area0);

  const bool ok = worst_ses <= 1e-6 && worst_eem <= 0.01 && worst_jump <= 1e-6;
  report(3, "phase-area preservation", ok,
         fmt("ses rel %.2e (tol 1e-6), eem vs (1+dt^2)^(t/dt) rel %.2e "
             "(tol 1e-2), ses-with-jumps rel %.2e (tol 1e-6)",
             worst_ses, worst_eem, worst_jump));
}

// --- 4: Hamiltonian behaviour on a common path -------------------------

void criterion_hamiltonian() {
  const OscillatorParams params{1.0, 0.2, 0.8};
  LevyConfig noise;
  noise.seed = kDefaultSeed;
  noise.horizon = 20.0;
  const LevyPath path = LevyPath::sample(noise);

  // exact solution: piecewise constant energy between jumps
  std::vector<double> edges{0.0};
  for (double t : path.jump_times(0)) edges.push_back(t);
  edges.push_back(20.0);
  double worst_drift = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double ref = exact_hamiltonian(params, path, edges[i]);
    for (int k = 1; k <= 10; ++k) {
      const double t = edges[i] + (edges[i + 1] - edges[i]) * k / 11.0;
      worst_drift = std::max(
          worst_drift, std::abs(exact_hamiltonian(params, path, t) - ref));
    }
  }

  const HamiltonianSystem sys = make_linear_oscillator(1.0);
  const State x0{{0.2}, {0.8}};
  SchemeConfig ses_cfg;
  ses_cfg.dt = 0.08;
  ses_cfg.t_end = 20.0;
  const TrajectoryRecord ses = integrate(sys, x0, path, ses_cfg);

  // time average by the trapezoid rule (jump rows have zero width)
  double integral = 0.0;
  for (std::size_t k = 1; k < ses.times.size(); ++k)
    integral += 0.5 * (ses.hamiltonians[k] + ses.hamiltonians[k - 1]) *
                (ses.times[k] - ses.times[k - 1]);
  const double average = integral / 20.0;

  // sign test on energy increments between jumps: no monotone trend
  std::vector<double> post_jump;
  for (std::size_t k = 0; k < ses.times.size(); ++k)
    if (ses.jump_flags[k]) post_jump.push_back(ses.hamiltonians[k]);
  int pos = 0, neg = 0;
  for (std::size_t k = 1; k < post_jump.size(); ++k) {
    const double d = post_jump[k] - post_jump[k - 1];
    if (d > 0) ++pos;
    if (d < 0) ++neg;
  }
  const bool no_trend =
      std::abs(pos - neg) <= 3.0 * std::sqrt(static_cast<double>(pos + neg));

  SchemeConfig eem_cfg = ses_cfg;
  eem_cfg.scheme = Scheme::ExplicitEuler;
  const TrajectoryRecord eem = integrate(sys, x0, path, eem_cfg);
  const double eem_growth = eem.hamiltonians.back() / eem.hamiltonians.front();

  const bool ok = worst_drift <= 1e-12 && average >= 0.25 && average <= 1.0 &&
                  no_trend && eem_growth >= 2.0;
  report(4, "Hamiltonian behaviour", ok,
         fmt("exact drift %.2e (tol 1e-12), ses time-average %.3f "
             "(band [0.25,1.0]), sign test |%d-%d|<=3*sqrt(n): %s, "
             "eem growth %.2fx (>=2)",
             worst_drift, average, pos, neg, no_trend ? "yes" : "no",
             eem_growth));
}

// --- 5: fine-step integrator vs the closed form ------------------------

void criterion_oracle_cross_validation() {
  const OscillatorParams params{1.0, 0.0, 1.0};
  const HamiltonianSystem sys = make_linear_oscillator(1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    LevyConfig noise;
    noise.horizon = 20.0;
    noise.seed = mix_seed(kDefaultSeed, 1000 + static_cast<std::uint64_t>(i));
    const LevyPath path = LevyPath::sample(noise);
    SchemeConfig cfg;
    cfg.dt = 1e-4;
    cfg.t_end = 20.0;
    cfg.record_every = 1 << 30;
    const State end =
        integrate(sys, State{{0.0}, {1.0}}, path, cfg).final_state();
    const State ref = exact_state(params, path, 20.0);
    worst = std::max({worst, std::abs(end.p[0] - ref.p[0]),
                      std::abs(end.q[0] - ref.q[0])});
  }
  report(5, "oracle cross-validation", worst <= 5e-3,
         fmt("max-norm endpoint error %.2e over 10 paths (tol 5e-3)", worst));
}

// --- 6: step-size bound and its warning --------------------------------

void criterion_step_bound() {
  const HamiltonianSystem sys = make_linear_oscillator(1.0);
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (8.0 * std::sqrt(2.0) * mid * mid < 1.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  const double got = step_size_bound(sys);

  SchemeConfig cfg;
  cfg.dt = 0.4;
  cfg.t_end = 1.0;
  std::fprintf(stderr, "(expected warning follows)\n");
  const TrajectoryRecord rec =
      integrate(sys, State{{0.0}, {1.0}}, LevyPath::empty(1.0), cfg);

  const bool ok = std::abs(got - root) <= 1e-12 && rec.step_bound_warning;
  report(6, "step-size bound", ok,
         fmt("bound %.15f vs root %.15f (tol 1e-12), warning emitted: %s",
             got, root, rec.step_bound_warning ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion_strong_order();
  criterion_symplecticity();
  criterion_phase_area();
  criterion_hamiltonian();
  criterion_oracle_cross_validation();
  criterion_step_bound();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
