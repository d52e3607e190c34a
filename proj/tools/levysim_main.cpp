#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levysim/csv.hpp"
#include "levysim/defaults.hpp"
#include "levysim/diagnostics.hpp"
#include "levysim/errors.hpp"
#include "levysim/integrators.hpp"
#include "levysim/levy_path.hpp"
#include "levysim/oracle_oscillator.hpp"

namespace {

using namespace levysim;

// Exit codes: 0 success, 1 validation error, 2 numerical failure, 3 I/O.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct CommonOpts {
  std::string scheme = "ses";
  double dt = kDefaultDt;
  double t_end = kDefaultHorizon;
  double beta = kDefaultBeta;
  double intensity = kDefaultIntensity;
  double sigma = kDefaultJumpSigma;
  double p0 = 0.0;
  double q0 = 1.0;
  std::uint64_t seed = kDefaultSeed;
  int record_every = 1;
  std::string out_dir = ".";
  bool dump_path = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--scheme", o.scheme, "Time-stepping scheme")
      ->check(CLI::IsMember({"ses", "eem"}))
      ->capture_default_str();
  cmd->add_option("--dt", o.dt, "Maximum drift step")->capture_default_str();
  cmd->add_option("--t-end", o.t_end, "End time")->capture_default_str();
  cmd->add_option("--beta", o.beta, "Noise coupling")->capture_default_str();
  cmd->add_option("--lambda", o.intensity, "Jump intensity")
      ->capture_default_str();
  cmd->add_option("--sigma", o.sigma, "Jump-size std-dev")
      ->capture_default_str();
  cmd->add_option("--p0", o.p0, "Initial momentum")->capture_default_str();
  cmd->add_option("--q0", o.q0, "Initial position")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  cmd->add_option("--record-every", o.record_every,
                  "Record every k-th drift step")
      ->capture_default_str();
  cmd->add_option("--out", o.out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_flag("--dump-path", o.dump_path,
                "Also write the realized jump path (path.csv)");
}

Scheme parse_scheme(const std::string& name) {
  return name == "eem" ? Scheme::ExplicitEuler : Scheme::SemiImplicitEuler;
}

LevyConfig noise_config(const CommonOpts& o) {
  LevyConfig cfg;
  cfg.intensity = o.intensity;
  cfg.jump_size_sigma = o.sigma;
  cfg.channels = 1;
  cfg.horizon = o.t_end;
  cfg.seed = o.seed;
  return cfg;
}

SchemeConfig scheme_config(const CommonOpts& o) {
  SchemeConfig cfg;
  cfg.scheme = parse_scheme(o.scheme);
  cfg.dt = o.dt;
  cfg.t_end = o.t_end;
  cfg.record_every = o.record_every;
  return cfg;
}

std::ofstream open_output(const CommonOpts& o, const std::string& name) {
  std::filesystem::create_directories(o.out_dir);
  const auto file = std::filesystem::path(o.out_dir) / name;
  std::ofstream os(file);
  if (!os) throw std::ios_base::failure("cannot open " + file.string());
  return os;
}

void maybe_dump_path(const CommonOpts& o, const LevyPath& path) {
  if (!o.dump_path) return;
  auto os = open_output(o, "path.csv");
  path.write_csv(os);
}

int cmd_simulate(const CommonOpts& o, bool with_exact) {
  const HamiltonianSystem sys = make_linear_oscillator(o.beta);
  const LevyPath path = LevyPath::sample(noise_config(o));
  const State x0{{o.p0}, {o.q0}};
  const TrajectoryRecord rec = integrate(sys, x0, path, scheme_config(o));
  {
    auto os = open_output(o, "trajectory.csv");
    rec.write_csv(os);
  }
  if (with_exact) {
    const OscillatorParams params{o.beta, o.p0, o.q0};
    auto os = open_output(o, "exact.csv");
    os << "t,P_1,Q_1,H0,jump_flag\n";
    for (std::size_t k = 0; k < rec.times.size(); ++k) {
      const double t = rec.times[k];
      const State x = rec.jump_flags[k] ? exact_state(params, path, t)
                                        : exact_state_left(params, path, t);
      const double h = 0.5 * (x.p[0] * x.p[0] + x.q[0] * x.q[0]);
      os << format_value(t) << ',' << format_value(x.p[0]) << ','
         << format_value(x.q[0]) << ',' << format_value(h) << ','
         << (rec.jump_flags[k] ? 1 : 0) << '\n';
    }
  }
  maybe_dump_path(o, path);
  return kExitOk;
}

int cmd_converge(const CommonOpts& o, const std::vector<double>& steps,
                 int num_paths, double slope_min, double slope_max) {
  if (steps.size() < 2) {
    std::cerr << "error: need at least two step sizes for a slope fit\n";
    return kExitValidation;
  }
  if (num_paths == 1)
    std::cerr << "warning: a single path gives a statistically noisy slope\n";
  const OscillatorParams params{o.beta, o.p0, o.q0};
  SchemeConfig base = scheme_config(o);
  const ConvergenceReport report =
      convergence_study(params, noise_config(o), base, steps, num_paths,
                        o.t_end, o.seed);
  {
    auto os = open_output(o, "convergence.csv");
    report.write_csv(os);
  }
  std::cout << "fitted slope: " << report.fitted_slope
            << " (residual " << report.fit_residual << ", "
            << report.num_paths << " paths)\n";
  if (report.fitted_slope < slope_min || report.fitted_slope > slope_max) {
    std::cerr << "error: slope outside acceptance band [" << slope_min << ", "
              << slope_max << "]\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_phase_domain(const CommonOpts& o, const std::vector<double>& snapshots,
                     double radius, std::size_t vertices) {
  const LevyPath path = LevyPath::sample(noise_config(o));
  const PhaseDomain initial = circle_domain(o.p0, o.q0, radius, vertices);

  SchemeConfig ses_cfg = scheme_config(o);
  ses_cfg.scheme = Scheme::SemiImplicitEuler;
  SchemeConfig eem_cfg = ses_cfg;
  eem_cfg.scheme = Scheme::ExplicitEuler;

  const HamiltonianSystem sys = make_linear_oscillator(o.beta);
  const auto ses = evolve_domain(sys, path, ses_cfg, initial, snapshots);
  const auto eem = evolve_domain(sys, path, eem_cfg, initial, snapshots);
  const auto exact = evolve_domain_exact(o.beta, path, initial, snapshots);

  auto dom_os = open_output(o, "domains.csv");
  auto area_os = open_output(o, "areas.csv");
  dom_os << "method,snapshot_time,vertex_index,P,Q\n";
  area_os << "method,snapshot_time,shoelace_area\n";
  const auto emit = [&](const std::string& method,
                        const std::vector<PhaseDomain>& doms) {
    for (const PhaseDomain& dom : doms) {
      for (std::size_t k = 0; k < dom.vertices.size(); ++k)
        dom_os << method << ',' << format_value(dom.timestamp) << ',' << k
               << ',' << format_value(dom.vertices[k].p[0]) << ','
               << format_value(dom.vertices[k].q[0]) << '\n';
      area_os << method << ',' << format_value(dom.timestamp) << ','
              << format_value(shoelace_area(dom)) << '\n';
    }
  };
  emit("exact", exact);
  emit("ses", ses);
  emit("eem", eem);
  maybe_dump_path(o, path);
  return kExitOk;
}

int cmd_hamiltonian(const CommonOpts& o) {
  const HamiltonianSystem sys = make_linear_oscillator(o.beta);
  const LevyPath path = LevyPath::sample(noise_config(o));
  const State x0{{o.p0}, {o.q0}};

  SchemeConfig ses_cfg = scheme_config(o);
  ses_cfg.scheme = Scheme::SemiImplicitEuler;
  SchemeConfig eem_cfg = ses_cfg;
  eem_cfg.scheme = Scheme::ExplicitEuler;

  const TrajectoryRecord ses = integrate(sys, x0, path, ses_cfg);
  const TrajectoryRecord eem = integrate(sys, x0, path, eem_cfg);
  const OscillatorParams params{o.beta, o.p0, o.q0};

  // SES and EEM share the jump-adapted grid, so records align row by row.
  auto os = open_output(o, "hamiltonian.csv");
  os << "t,H_ses,H_exact,H_eem,jump_flag\n";
  for (std::size_t k = 0; k < ses.times.size(); ++k) {
    const double t = ses.times[k];
    const State x = ses.jump_flags[k] ? exact_state(params, path, t)
                                      : exact_state_left(params, path, t);
    const double h_exact = 0.5 * (x.p[0] * x.p[0] + x.q[0] * x.q[0]);
    os << format_value(t) << ',' << format_value(ses.hamiltonians[k]) << ','
       << format_value(h_exact) << ',' << format_value(eem.hamiltonians[k])
       << ',' << (ses.jump_flags[k] ? 1 : 0) << '\n';
  }
  maybe_dump_path(o, path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jump-driven Hamiltonian SDE experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --config appear after the subcommand
  app.set_config("--config", "",
                 "Config file with key=value lines ('#' comments); "
                 "command-line flags take precedence");

  CommonOpts sim_o, conv_o, dom_o, ham_o;
  bool with_exact = false;
  std::vector<double> steps = {0.02, 0.01, 0.005, 0.0025};
  int num_paths = 100;
  double slope_min = 0.85, slope_max = 1.15;
  std::vector<double> snapshots = {0.0, 4.0, 8.0};
  double radius = 1.0;
  std::size_t vertices = 256;

  CLI::App* sim = app.add_subcommand("simulate", "One trajectory to CSV");
  add_common(sim, sim_o);
  sim->add_flag("--with-exact", with_exact,
                "Also write the exact solution on the same path");

  CLI::App* conv =
      app.add_subcommand("converge", "Endpoint strong-error slope study");
  add_common(conv, conv_o);
  conv_o.p0 = 0.0;
  conv_o.q0 = 1.0;
  conv->add_option("--steps", steps, "Step sizes, decreasing")
      ->delimiter(',')
      ->capture_default_str();
  conv->add_option("--paths", num_paths, "Monte Carlo paths")
      ->capture_default_str();
  conv->add_option("--slope-min", slope_min, "Acceptance band lower edge")
      ->capture_default_str();
  conv->add_option("--slope-max", slope_max, "Acceptance band upper edge")
      ->capture_default_str();

  CLI::App* dom =
      app.add_subcommand("phase-domain", "Evolve a phase-plane circle");
  dom_o.p0 = 0.2;
  dom_o.q0 = 0.8;
  add_common(dom, dom_o);
  dom->add_option("--snapshots", snapshots, "Snapshot times")
      ->delimiter(',')
      ->capture_default_str();
  dom->add_option("--radius", radius, "Circle radius")->capture_default_str();
  dom->add_option("--vertices", vertices, "Circle vertex count")
      ->capture_default_str();

  CLI::App* ham = app.add_subcommand(
      "hamiltonian", "Energy traces of SES, exact solution and EEM");
  ham_o.p0 = 0.2;
  ham_o.q0 = 0.8;
  add_common(ham, ham_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_o, with_exact);
    if (conv->parsed())
      return cmd_converge(conv_o, steps, num_paths, slope_min, slope_max);
    if (dom->parsed()) return cmd_phase_domain(dom_o, snapshots, radius, vertices);
    if (ham->parsed()) return cmd_hamiltonian(ham_o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << " (iterations " << e.iterations
              << ", residual " << e.residual << ", t=" << e.at_time << ")\n";
    return kExitNumerical;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << " (t=" << e.at_time << ")\n";
    return kExitNumerical;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitValidation;
}
