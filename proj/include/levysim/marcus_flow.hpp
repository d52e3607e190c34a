#pragma once

#include <cstddef>
#include <vector>

#include "levysim/hamiltonian.hpp"
#include "levysim/levy_path.hpp"

namespace levysim {

struct MarcusOptions {
  // Substeps of the fixed-step RK4 solve of the auxiliary unit-time ODE;
  // only used for state-dependent jump fields.
  std::size_t substeps = 100;
};

// Resolve one jump: flow the left-limit state along the noise field for
// unit fictitious time scaled by the jump size. Additive channels reduce to
// the exact translation P -= grad_q(t)*l, Q += grad_p(t)*l; systems with a
// jump_field callback are integrated with RK4. Throws DivergenceError if an
// intermediate state becomes non-finite.
State apply_jump(const HamiltonianSystem& sys, const State& left_limit,
                 const JumpEvent& ev, const MarcusOptions& opts = {});

struct MarcusIncrement {
  State state;                      // post-jump state
  std::vector<double> correction;   // flow(x) - x - V(x)*l, length 2n
};

// Post-jump state together with the deviation of the flow from the linear
// increment V(x)*l. Identically zero for additive channels.
MarcusIncrement marcus_increment(const HamiltonianSystem& sys,
                                 const State& left_limit, const JumpEvent& ev,
                                 const MarcusOptions& opts = {});

}  // namespace levysim
