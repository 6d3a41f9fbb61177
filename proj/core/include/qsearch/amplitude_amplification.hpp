#pragma once

#include <cstddef>

#include "qsearch/operator.hpp"
#include "qsearch/trajectory.hpp"

namespace qsearch {

struct SearchRun {
  RunTrajectory trajectory;
  StateVector state;
};

/// One step of G = U S_0 U^dagger S_t; one oracle query per step.
class AmplitudeAmplifier {
 public:
  AmplitudeAmplifier(const Operator& u, const Operator& s0, const Operator& st);

  void step(StateVector& state) const;
  static constexpr unsigned kQueriesPerStep = 1;

 private:
  const Operator& u_;
  const Operator& s0_;
  const Operator& st_;
};

/// Iterates G on U|0>, recording alpha after each of the n_iters steps
/// (step 0 is U|0> itself).
SearchRun run_amplitude_amplification(const Operator& u, const Operator& s0,
                                      const Operator& st, std::size_t n_iters,
                                      const TargetSet& targets);

/// floor(pi / (4 asin(alpha))): the iteration count that maximizes
/// sin^2((2n+1) asin(alpha)) without overshooting.
std::size_t grover_iterations(double alpha);

}  // namespace qsearch
