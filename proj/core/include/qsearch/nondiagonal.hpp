#pragma once

#include <string>
#include <vector>

#include "qsearch/conjugated_op.hpp"
#include "qsearch/workspace.hpp"

namespace qsearch {

struct NonDiagonalRun {
  /// Trajectory of the direct form with P = E_P S_0 E_P^dagger and
  /// Q = E_Q S_t E_Q^dagger.
  RunTrajectory trajectory;
  /// Largest amplitude deviation between the direct form and
  /// E_Q (V-form) with V = E_Q^dagger U E_P, over all recorded steps.
  double v_form_deviation = 0.0;
  double selectivity_p = 0.0;  // |(E_P)_00|
  double selectivity_q = 0.0;  // min over targets of |(E_Q)_tt|
  std::vector<std::string> warnings;
  std::size_t iterations = 0;
};

/// Runs the engine on the conjugated operators. In iterative mode s0_core
/// is the |0> rotation and `varphi` its angle; in recursive mode `levels`
/// sets the depth.
NonDiagonalRun run_nondiagonal_scenario(const UnitaryFamily& e_p, const UnitaryFamily& e_q,
                                        const DiagonalPhaseOp& s0_core,
                                        const DiagonalPhaseOp& st_core,
                                        const UnitaryFamily& u, const TargetSet& targets,
                                        EngineMode mode, double varphi, unsigned levels = 0);

}  // namespace qsearch
