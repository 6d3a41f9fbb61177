#include "qsearch/iterative_search.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

void require_rotation(double varphi) {
  if (!std::isfinite(varphi) || std::abs(std::sin(varphi / 2.0)) < 1e-12) {
    throw DegenerateError("iterative operator: varphi must not be 0 mod 2pi");
  }
}

constexpr double kTrivialTheta = 1e-9;

}  // namespace

IterativeOperator::IterativeOperator(const Operator& u, const Operator& rt, double varphi)
    : u_(&u), rt_(&rt), varphi_(varphi) {
  require_rotation(varphi);
  if (rt.dim() != u.dim()) throw DimensionError("IterativeOperator: dimension mismatch");
  const std::size_t zero[] = {0};
  owned_r0_.emplace(build_selective_rotation(u.dim(), zero, varphi));
}

IterativeOperator::IterativeOperator(const Operator& u, const Operator& rt, const Operator& r0,
                                     double varphi)
    : u_(&u), rt_(&rt), r0_(&r0), varphi_(varphi) {
  require_rotation(varphi);
  if (rt.dim() != u.dim() || r0.dim() != u.dim()) {
    throw DimensionError("IterativeOperator: dimension mismatch");
  }
}

void IterativeOperator::apply(StateVector& state) const {
  // Rightmost factor first: Rt, U^dag, R0, U, Rt^dag, U^dag, R0^dag, U.
  qsearch::apply(*rt_, state);
  qsearch::apply(*u_, state, true);
  qsearch::apply(r0(), state);
  qsearch::apply(*u_, state);
  qsearch::apply(*rt_, state, true);
  qsearch::apply(*u_, state, true);
  qsearch::apply(r0(), state, true);
  qsearch::apply(*u_, state);
}

void IterativeOperator::apply_adjoint(StateVector& state) const {
  qsearch::apply(*u_, state, true);
  qsearch::apply(r0(), state);
  qsearch::apply(*u_, state);
  qsearch::apply(*rt_, state);
  qsearch::apply(*u_, state, true);
  qsearch::apply(r0(), state, true);
  qsearch::apply(*u_, state);
  qsearch::apply(*rt_, state, true);
}

IterativeOperator build_T_step(const Operator& u, const Operator& rt, double varphi) {
  return IterativeOperator(u, rt, varphi);
}

SubspaceFrame compute_subspace_frame(const StateVector& initial, const Operator& rt) {
  StateVector sigma = initial;
  apply(rt, sigma, /*adjoint=*/true);
  const Complex c = inner_product(sigma, initial);

  StateVector tau = initial;
  auto t = tau.amplitudes();
  const auto s = sigma.amplitudes();
  for (std::size_t j = 0; j < t.size(); ++j) t[j] -= c * s[j];
  const double residual = tau.norm();
  const double theta = std::atan2(residual, std::abs(c));
  if (theta < kTrivialTheta) {
    throw DegenerateError("oracle acts trivially on U|0>: theta = " + std::to_string(theta));
  }
  const double chi = std::arg(c);
  const Complex scale = std::polar(1.0 / residual, -chi);
  for (auto& a : t) a *= scale;
  return SubspaceFrame{initial, std::move(sigma), std::move(tau), theta, chi};
}

SubspaceFrame compute_subspace_frame(const Operator& u, const Operator& rt) {
  if (rt.dim() != u.dim()) throw DimensionError("compute_subspace_frame: dimension mismatch");
  return compute_subspace_frame(prepare(u), rt);
}

double predict_iterative_queries(const Operator& u, const DiagonalPhaseOp& rt, double varphi) {
  if (rt.dim() != u.dim()) throw DimensionError("predict_iterative_queries: dimension mismatch");
  const StateVector u0 = prepare(u);
  double weight = 0.0;
  for (std::size_t j = 0; j < u0.dim(); ++j) {
    const double s = std::sin(rt.phase(j) / 2.0);
    weight += std::norm(u0[j]) * s * s;
  }
  const double denom = 4.0 * std::abs(std::sin(varphi / 2.0)) * std::sqrt(weight);
  if (!(denom > 1e-300)) throw DegenerateError("predict_iterative_queries: query count diverges");
  return std::numbers::pi / denom;
}

double predicted_rotation_angle(double theta, double varphi, std::size_t n) {
  return theta * (1.0 + 2.0 * static_cast<double>(n) * std::abs(std::sin(varphi / 2.0)));
}

std::size_t iterative_auto_iterations(double theta, double varphi) {
  const double rate = theta * std::abs(std::sin(varphi / 2.0));
  if (!(rate > 0.0)) throw DegenerateError("iterative_auto_iterations: zero rotation rate");
  return static_cast<std::size_t>(std::floor(std::numbers::pi / (4.0 * rate)));
}

namespace {

IterativeRun iterate(const IterativeOperator& step, const StateVector& initial,
                     const Operator& rt, const TargetSet& targets,
                     std::optional<std::size_t> n_iters) {
  if (targets.dim() != initial.dim()) throw DimensionError("run_iterative: target dimension mismatch");
  SubspaceFrame frame = compute_subspace_frame(initial, rt);
  const std::size_t n = n_iters ? *n_iters : iterative_auto_iterations(frame.theta, step.varphi());

  IterativeRun run{{}, initial, std::move(frame), n};
  auto record = [&](std::size_t k) {
    const double on_sigma = std::abs(inner_product(run.frame.sigma, run.state));
    const double on_tau = std::abs(inner_product(run.frame.tau, run.state));
    run.trajectory.record(k, k * IterativeOperator::kQueriesPerStep,
                          target_projection(run.state, targets), std::atan2(on_tau, on_sigma),
                          on_tau);
  };
  record(0);
  for (std::size_t k = 1; k <= n; ++k) {
    step.apply(run.state);
    record(k);
  }
  return run;
}

}  // namespace

IterativeRun run_iterative(const Operator& u, const Operator& rt, double varphi,
                           const TargetSet& targets, std::optional<std::size_t> n_iters) {
  const IterativeOperator step(u, rt, varphi);
  return iterate(step, prepare(u), rt, targets, n_iters);
}

IterativeRun run_iterative(const Operator& u, const Operator& rt, const Operator& r0,
                           double varphi, const TargetSet& targets,
                           std::optional<std::size_t> n_iters) {
  const IterativeOperator step(u, rt, r0, varphi);
  return iterate(step, prepare(u), rt, targets, n_iters);
}

}  // namespace qsearch
