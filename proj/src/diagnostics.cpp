#include "levysim/diagnostics.hpp"

#include <cmath>
#include <numbers>

#include "levysim/csv.hpp"
#include "levysim/errors.hpp"
#include "levysim/rng.hpp"

namespace levysim {

PhaseDomain circle_domain(double center_p, double center_q, double radius,
                          std::size_t count) {
  if (count < 3) throw DomainError("a domain needs at least 3 vertices");
  PhaseDomain dom;
  dom.vertices.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(k) / count;
    dom.vertices.push_back(State{{center_p + radius * std::cos(angle)},
                                 {center_q + radius * std::sin(angle)}});
  }
  return dom;
}

double shoelace_area(const PhaseDomain& domain) {
  const auto& v = domain.vertices;
  if (v.size() < 3) throw DomainError("a domain needs at least 3 vertices");
  double twice = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const State& a = v[k];
    const State& b = v[(k + 1) % v.size()];
    twice += a.p[0] * b.q[0] - b.p[0] * a.q[0];
  }
  return 0.5 * std::abs(twice);
}

std::vector<PhaseDomain> evolve_domain(const HamiltonianSystem& sys,
                                       const LevyPath& path,
                                       const SchemeConfig& cfg,
                                       const PhaseDomain& initial,
                                       std::span<const double> snapshot_times) {
  if (sys.n != 1) throw DomainError("phase domains require n=1");
  for (double t : snapshot_times)
    if (t < 0.0 || t > path.horizon())
      throw DomainError("snapshot time outside the path horizon");
  std::vector<PhaseDomain> out;
  for (double t : snapshot_times) {
    PhaseDomain dom;
    dom.timestamp = t;
    if (t == 0.0) {
      dom.vertices = initial.vertices;
    } else {
      SchemeConfig run = cfg;
      run.t_end = t;
      run.record_every = 1 << 30;  // endpoint only
      dom.vertices.reserve(initial.vertices.size());
      for (std::size_t i = 0; i < initial.vertices.size(); ++i) {
        try {
          dom.vertices.push_back(
              integrate(sys, initial.vertices[i], path, run).final_state());
        } catch (DivergenceError& err) {
          err.substep = i;
          throw;
        }
      }
    }
    out.push_back(std::move(dom));
  }
  return out;
}

std::vector<PhaseDomain> evolve_domain_exact(
    double beta, const LevyPath& path, const PhaseDomain& initial,
    std::span<const double> snapshot_times) {
  std::vector<PhaseDomain> out;
  for (double t : snapshot_times) {
    PhaseDomain dom;
    dom.timestamp = t;
    dom.vertices.reserve(initial.vertices.size());
    for (const State& v : initial.vertices) {
      OscillatorParams params{beta, v.p[0], v.q[0]};
      dom.vertices.push_back(exact_state(params, path, t));
    }
    out.push_back(std::move(dom));
  }
  return out;
}

void ConvergenceReport::write_csv(std::ostream& os) const {
  os << "tau,rms_error\n";
  for (std::size_t k = 0; k < step_sizes.size(); ++k)
    os << format_value(step_sizes[k]) << ',' << format_value(rms_errors[k])
       << '\n';
}

ConvergenceReport convergence_study(const OscillatorParams& params,
                                    const LevyConfig& noise,
                                    const SchemeConfig& base,
                                    std::span<const double> step_sizes,
                                    int num_paths, double t_end,
                                    std::uint64_t master_seed) {
  if (num_paths < 1) throw ConfigError("need at least one path");
  if (step_sizes.size() < 2)
    throw ConfigError("need at least two step sizes for a slope fit");
  for (std::size_t k = 0; k + 1 < step_sizes.size(); ++k)
    if (!(step_sizes[k] > step_sizes[k + 1]))
      throw ConfigError("step sizes must be strictly decreasing");
  for (double h : step_sizes)
    if (!(h > 0.0) || h > t_end)
      throw ConfigError("step sizes must lie in (0, t_end]");

  const HamiltonianSystem sys = make_linear_oscillator(params.beta);
  const State x0{{params.p0}, {params.q0}};

  LevyConfig path_cfg = noise;
  path_cfg.horizon = t_end;

  std::vector<double> sum_sq(step_sizes.size(), 0.0);
  for (int i = 0; i < num_paths; ++i) {
    path_cfg.seed = mix_seed(master_seed, static_cast<std::uint64_t>(i));
    const LevyPath path = LevyPath::sample(path_cfg);
    const State ref = exact_state(params, path, t_end);
    for (std::size_t k = 0; k < step_sizes.size(); ++k) {
      SchemeConfig cfg = base;
      cfg.dt = step_sizes[k];
      cfg.t_end = t_end;
      cfg.record_every = 1 << 30;
      const State end = integrate(sys, x0, path, cfg).final_state();
      const double dp = end.p[0] - ref.p[0];
      const double dq = end.q[0] - ref.q[0];
      sum_sq[k] += dp * dp + dq * dq;
    }
  }

  ConvergenceReport report;
  report.step_sizes.assign(step_sizes.begin(), step_sizes.end());
  report.num_paths = num_paths;
  report.rms_errors.resize(step_sizes.size());
  for (std::size_t k = 0; k < step_sizes.size(); ++k)
    report.rms_errors[k] = std::sqrt(sum_sq[k] / num_paths);

  // Least-squares line through (log tau, log rms).
  const std::size_t m = step_sizes.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double x = std::log(report.step_sizes[k]);
    const double y = std::log(report.rms_errors[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  report.fitted_slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - report.fitted_slope * sx) / m;
  double res = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double x = std::log(report.step_sizes[k]);
    const double y = std::log(report.rms_errors[k]);
    const double d = y - (report.fitted_slope * x + intercept);
    res += d * d;
  }
  report.fit_residual = std::sqrt(res / m);
  return report;
}

std::vector<std::pair<double, double>> hamiltonian_trace(
    const TrajectoryRecord& record) {
  if (!record.has_hamiltonians())
    throw CapabilityError("record carries no Hamiltonian values");
  std::vector<std::pair<double, double>> out;
  out.reserve(record.times.size());
  for (std::size_t k = 0; k < record.times.size(); ++k)
    out.emplace_back(record.times[k], record.hamiltonians[k]);
  return out;
}

}  // namespace levysim
