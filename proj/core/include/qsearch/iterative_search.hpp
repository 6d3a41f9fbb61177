#pragma once

#include <cstddef>
#include <optional>

#include "qsearch/amplitude_amplification.hpp"
#include "qsearch/phase_ops.hpp"

namespace qsearch {

/// The composite T = U R0^{-varphi} U^dagger Rt^dagger U R0^{varphi} U^dagger Rt.
///
/// Consumes two oracle queries per application (Rt and Rt^dagger). R0 is the
/// selective rotation of |0> by varphi unless an explicit operator is given
/// (workspace and non-diagonal scenarios supply their own).
class IterativeOperator {
 public:
  IterativeOperator(const Operator& u, const Operator& rt, double varphi);
  IterativeOperator(const Operator& u, const Operator& rt, const Operator& r0, double varphi);

  void apply(StateVector& state) const;
  /// T^dagger, the operator sequence reversed with every factor adjointed.
  void apply_adjoint(StateVector& state) const;

  double varphi() const noexcept { return varphi_; }
  static constexpr unsigned kQueriesPerStep = 2;

 private:
  const Operator& r0() const noexcept { return owned_r0_ ? *owned_r0_ : *r0_; }

  const Operator* u_;
  const Operator* rt_;
  const Operator* r0_ = nullptr;
  std::optional<DiagonalPhaseOp> owned_r0_;
  double varphi_;
};

/// Throws DegenerateError when varphi is 0 mod 2pi.
IterativeOperator build_T_step(const Operator& u, const Operator& rt, double varphi);

/// |sigma> = Rt^dagger U|0>, theta with cos(theta) = |<sigma|U|0>|, and |tau>
/// orthogonal to |sigma> such that U|0> = cos(theta)|sigma> + sin(theta)|tau>
/// up to a global phase.
struct SubspaceFrame {
  StateVector initial;
  StateVector sigma;
  StateVector tau;
  double theta = 0.0;
  /// arg <sigma|U|0>; U|0> = e^{i phase}(cos(theta)|sigma> + sin(theta)|tau>).
  double overlap_phase = 0.0;
};

/// Throws DegenerateError when theta is below 1e-9.
SubspaceFrame compute_subspace_frame(const Operator& u, const Operator& rt);

/// Same, with the initial state given explicitly.
SubspaceFrame compute_subspace_frame(const StateVector& initial, const Operator& rt);

/// Q = pi / (4 sin(varphi/2) sqrt(sum_j |U_j0|^2 sin^2(phi_j/2))).
/// Throws DegenerateError when the denominator vanishes.
double predict_iterative_queries(const Operator& u, const DiagonalPhaseOp& rt, double varphi);

/// theta (1 + 2 n sin(varphi/2)).
double predicted_rotation_angle(double theta, double varphi, std::size_t n);

/// floor(pi / (4 theta sin(varphi/2))).
std::size_t iterative_auto_iterations(double theta, double varphi);

struct IterativeRun {
  RunTrajectory trajectory;
  StateVector state;
  SubspaceFrame frame;
  std::size_t iterations = 0;
};

/// Iterates T from U|0>. With no explicit count, stops after
/// floor(pi / (4 theta sin(varphi/2))) steps using the measured theta.
IterativeRun run_iterative(const Operator& u, const Operator& rt, double varphi,
                           const TargetSet& targets,
                           std::optional<std::size_t> n_iters = std::nullopt);

/// General form used by the workspace and non-diagonal scenarios.
IterativeRun run_iterative(const Operator& u, const Operator& rt, const Operator& r0,
                           double varphi, const TargetSet& targets,
                           std::optional<std::size_t> n_iters = std::nullopt);

}  // namespace qsearch
