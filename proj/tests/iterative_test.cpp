#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qsearch/errors.hpp"
#include "qsearch/iterative_search.hpp"
#include "qsearch/random.hpp"
#include "qsearch/unitary.hpp"

using namespace qsearch;
using std::numbers::pi;

TEST(Iterative, FrameDecomposesInitialState) {
  const auto u = UnitaryFamily::dense(haar_unitary(64, 2));
  const std::size_t t[] = {3, 17};
  const double angles[] = {pi / 2, 2.0};
  const auto rt = build_selective_rotation(64, t, angles);
  const auto f = compute_subspace_frame(u, rt);
  EXPECT_NEAR(f.sigma.norm(), 1.0, 1e-12);
  EXPECT_NEAR(f.tau.norm(), 1.0, 1e-12);
  EXPECT_LE(std::abs(inner_product(f.sigma, f.tau)), 1e-12);
  const Complex phase = std::polar(1.0, f.overlap_phase);
  for (std::size_t j = 0; j < 64; ++j) {
    const Complex rebuilt = phase * (std::cos(f.theta) * f.sigma[j] + std::sin(f.theta) * f.tau[j]);
    EXPECT_LE(std::abs(rebuilt - f.initial[j]), 1e-12);
  }
}

TEST(Iterative, ThetaForQuarterTurn) {
  const auto u = UnitaryFamily::walsh_hadamard(1024);
  const std::size_t t[] = {1};
  const auto f = compute_subspace_frame(u, build_selective_rotation(1024, t, pi / 2));
  EXPECT_NEAR(f.theta, 0.044186967050681585, 1e-14);
}

TEST(Iterative, QueryPrediction) {
  const auto u = UnitaryFamily::walsh_hadamard(1024);
  const std::size_t t[] = {1};
  const auto rt = build_selective_rotation(1024, t, pi / 2);
  EXPECT_NEAR(predict_iterative_queries(u, rt, pi / 2), 50.265482457436704, 1e-10);
  EXPECT_THROW(predict_iterative_queries(u, DiagonalPhaseOp::identity(1024), pi / 2),
               DegenerateError);
}

TEST(Iterative, AutoStopReachesTarget) {
  const auto u = UnitaryFamily::walsh_hadamard(1024);
  const TargetSet targets(1024, {1});
  const auto rt = build_selective_rotation(1024, targets.indices(), pi / 2);
  const auto run = run_iterative(u, rt, pi / 2, targets);
  EXPECT_EQ(run.iterations, 25u);
  EXPECT_EQ(run.trajectory.back().oracle_queries, 50u);
  EXPECT_GE(run.trajectory.final_success(), 0.99);
  EXPECT_EQ(iterative_auto_iterations(run.frame.theta, pi / 2), 25u);
}

TEST(Iterative, RotationRateMatchesPrediction) {
  // Per-step growth of the angle is 2 theta sin(varphi/2) once the start-up transient is gone.
  const auto u = UnitaryFamily::walsh_hadamard(1 << 14);
  const TargetSet targets(1 << 14, {5});
  const auto rt = build_selective_rotation(1 << 14, targets.indices(), pi / 2);
  const auto run = run_iterative(u, rt, pi / 2, targets, 40);
  const double rate = 2.0 * run.frame.theta * std::sin(pi / 4);
  for (std::size_t k = 6; k + 1 < run.trajectory.size(); ++k) {
    const double a = *run.trajectory.steps[k].angle_to_sigma;
    const double b = *run.trajectory.steps[k + 1].angle_to_sigma;
    EXPECT_NEAR(b - a, rate, run.frame.theta * run.frame.theta);
  }
}

TEST(Iterative, EqualsTwoGroverSteps) {
  const std::size_t n = 256;
  const auto u = UnitaryFamily::walsh_hadamard(n);
  const TargetSet targets(n, {77});
  const std::size_t z[] = {0};
  const auto it = build_selective_inversion(n, targets.indices());
  const auto i0 = build_selective_inversion(n, z);
  const IterativeOperator t(u, it, pi);
  const AmplitudeAmplifier g(u, i0, it);
  StateVector a = prepare(u), b = prepare(u);
  for (int k = 0; k < 20; ++k) {
    t.apply(a);
    g.step(b);
    g.step(b);
    EXPECT_GE(fidelity(a, b), 1.0 - 1e-12);
  }
}

TEST(Iterative, AdjointInverts) {
  const auto u = UnitaryFamily::dense(haar_unitary(32, 5));
  const std::size_t t[] = {4};
  const auto rt = build_selective_rotation(32, t, 1.3);
  const IterativeOperator op(u, rt, 0.8);
  const StateVector r = random_state(32, 1);
  StateVector s = r;
  op.apply(s);
  op.apply_adjoint(s);
  EXPECT_GE(fidelity(r, s), 1.0 - 1e-12);
}

TEST(Iterative, DegenerateInputs) {
  const auto u = UnitaryFamily::walsh_hadamard(16);
  const std::size_t t[] = {4};
  const auto rt = build_selective_rotation(16, t, pi);
  EXPECT_THROW(IterativeOperator(u, rt, 0.0), DegenerateError);
  EXPECT_THROW(IterativeOperator(u, rt, 2 * pi), DegenerateError);
  EXPECT_THROW(compute_subspace_frame(u, DiagonalPhaseOp::identity(16)), DegenerateError);
}

TEST(Iterative, PerTargetPhases) {
  const std::size_t n = 1 << 12;
  const auto u = UnitaryFamily::walsh_hadamard(n);
  const auto targets = TargetSet::random(n, 4, 3);
  const double angles[] = {pi / 2, 2.0, 1.0, pi};
  const auto rt = build_selective_rotation(n, targets.indices(), angles);
  const auto run = run_iterative(u, rt, pi / 3, targets);
  EXPECT_GE(run.trajectory.max_success(), 0.95);
  const double q = predict_iterative_queries(u, rt, pi / 3);
  EXPECT_NEAR(static_cast<double>(run.trajectory.back().oracle_queries), q, 0.1 * q + 2.0);
}
