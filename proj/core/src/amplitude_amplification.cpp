#include "qsearch/amplitude_amplification.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsearch/errors.hpp"

namespace qsearch {

AmplitudeAmplifier::AmplitudeAmplifier(const Operator& u, const Operator& s0, const Operator& st)
    : u_(u), s0_(s0), st_(st) {
  if (s0.dim() != u.dim() || st.dim() != u.dim()) {
    throw DimensionError("AmplitudeAmplifier: dimension mismatch");
  }
}

void AmplitudeAmplifier::step(StateVector& state) const {
  apply(st_, state);
  apply(u_, state, /*adjoint=*/true);
  apply(s0_, state);
  apply(u_, state);
}

SearchRun run_amplitude_amplification(const Operator& u, const Operator& s0, const Operator& st,
                                      std::size_t n_iters, const TargetSet& targets) {
  if (targets.dim() != u.dim()) throw DimensionError("run_amplitude_amplification: target dimension mismatch");
  const AmplitudeAmplifier g(u, s0, st);
  SearchRun run{{}, prepare(u)};
  run.trajectory.record(0, 0, target_projection(run.state, targets));
  for (std::size_t n = 1; n <= n_iters; ++n) {
    g.step(run.state);
    run.trajectory.record(n, n * AmplitudeAmplifier::kQueriesPerStep,
                          target_projection(run.state, targets));
  }
  return run;
}

std::size_t grover_iterations(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) throw DegenerateError("grover_iterations: need 0 < alpha <= 1");
  return static_cast<std::size_t>(std::floor(std::numbers::pi / (4.0 * std::asin(alpha))));
}

}  // namespace qsearch
