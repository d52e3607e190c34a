#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levysim {

// Invalid configuration or construction parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Query outside the valid domain (time out of range, degenerate input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A capability the object does not provide (e.g. missing Hamiltonian callback).
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Fixed-point (or other iterative) solver failed to converge.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& msg, int iterations, double residual,
              double at_time = 0.0)
      : std::runtime_error(msg),
        iterations(iterations),
        residual(residual),
        at_time(at_time) {}

  int iterations;
  double residual;
  double at_time;
};

// A state became non-finite during integration.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& msg, std::size_t substep,
                  double at_time = 0.0)
      : std::runtime_error(msg), substep(substep), at_time(at_time) {}

  std::size_t substep;
  double at_time;
};

}  // namespace levysim
