#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "levysim/integrators.hpp"
#include "levysim/oracle_oscillator.hpp"

namespace levysim {

// A closed curve in the phase plane (n=1 systems), sampled by vertices;
// closure is implied, the first vertex is not repeated.
struct PhaseDomain {
  std::vector<State> vertices;
  double timestamp = 0.0;
};

// Circle of given center and radius sampled by `count` vertices.
PhaseDomain circle_domain(double center_p, double center_q, double radius,
                          std::size_t count = 256);

// Absolute polygon area by the shoelace formula. Throws DomainError for
// fewer than 3 vertices.
double shoelace_area(const PhaseDomain& domain);

// Integrate every vertex under the same path and scheme; returns one
// domain per snapshot time (a snapshot at 0 is the initial domain).
std::vector<PhaseDomain> evolve_domain(const HamiltonianSystem& sys,
                                       const LevyPath& path,
                                       const SchemeConfig& cfg,
                                       const PhaseDomain& initial,
                                       std::span<const double> snapshot_times);

// Exact-flow images of the domain vertices at the snapshot times.
std::vector<PhaseDomain> evolve_domain_exact(
    double beta, const LevyPath& path, const PhaseDomain& initial,
    std::span<const double> snapshot_times);

struct ConvergenceReport {
  std::vector<double> step_sizes;   // strictly decreasing
  std::vector<double> rms_errors;   // endpoint mean-square errors
  double fitted_slope = 0.0;        // log(rms) vs log(step) least squares
  double fit_residual = 0.0;        // rms of the fit residuals
  int num_paths = 0;

  // Columns: tau, rms_error.
  void write_csv(std::ostream& os) const;
};

// Endpoint strong-error study for the oscillator: for each of num_paths
// independently seeded paths, integrate at every step size and compare
// against the exact solution on the same path (common random numbers).
// Per-path seeds derive from master_seed via mix_seed; the reduction is a
// plain sum in path order, so the report is reproducible.
ConvergenceReport convergence_study(const OscillatorParams& params,
                                    const LevyConfig& noise,
                                    const SchemeConfig& base,
                                    std::span<const double> step_sizes,
                                    int num_paths, double t_end,
                                    std::uint64_t master_seed);

// The (t, H0) series of a record. Throws CapabilityError when the record
// carries no Hamiltonian values.
std::vector<std::pair<double, double>> hamiltonian_trace(
    const TrajectoryRecord& record);

}  // namespace levysim
