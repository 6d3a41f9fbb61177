#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qsearch/amplitude_amplification.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/phase_ops.hpp"
#include "qsearch/unitary.hpp"

using namespace qsearch;
using std::numbers::pi;

namespace {

// Two-level model of G = U R0(varphi) U^dag Rt(phi) on span{|t>, |r>} with
// U|0> = a|t> + b|r>. Independent of the state-vector kernels.
std::vector<double> two_level_trajectory(double alpha, double phi, double varphi, int steps) {
  const double b = std::sqrt(1.0 - alpha * alpha);
  Complex t = alpha, r = b;
  const Complex k = std::polar(1.0, varphi) - 1.0;
  std::vector<double> out{std::norm(t)};
  for (int n = 0; n < steps; ++n) {
    t *= std::polar(1.0, phi);
    const Complex overlap = alpha * t + b * r;
    t += k * overlap * alpha;
    r += k * overlap * b;
    out.push_back(std::norm(t));
  }
  return out;
}

}  // namespace

TEST(Grover, ClosedForm) {
  const std::size_t n = 1024;
  const auto u = UnitaryFamily::walsh_hadamard(n);
  const TargetSet t(n, {123});
  const std::size_t z[] = {0};
  const auto s0 = build_selective_inversion(n, z);
  const auto st = build_selective_inversion(n, t.indices());
  const auto run = run_amplitude_amplification(u, s0, st, 25, t);
  ASSERT_EQ(run.trajectory.size(), 26u);
  const double theta = std::asin(1.0 / 32.0);
  for (const auto& step : run.trajectory.steps) {
    const double expected = std::pow(std::sin((2.0 * step.step + 1.0) * theta), 2);
    EXPECT_NEAR(step.success_prob, expected, 1e-12);
    EXPECT_EQ(step.oracle_queries, step.step);
  }
  EXPECT_NEAR(run.trajectory.final_success(), 0.9994612447444079, 1e-9);
}

TEST(Grover, IterationCount) {
  EXPECT_EQ(grover_iterations(1.0 / 32.0), 25u);
  EXPECT_EQ(grover_iterations(0.5), 1u);
  EXPECT_THROW(grover_iterations(0.0), DegenerateError);
}

TEST(Grover, MismatchMatchesTwoLevelModel) {
  const std::size_t n = 1024;
  const auto u = UnitaryFamily::walsh_hadamard(n);
  const TargetSet t(n, {700});
  const std::size_t z[] = {0};
  const auto s0 = build_selective_rotation(n, z, pi / 2);
  const auto st = build_selective_rotation(n, t.indices(), pi);
  const auto run = run_amplitude_amplification(u, s0, st, 250, t);
  const auto oracle = two_level_trajectory(1.0 / 32.0, pi, pi / 2, 250);
  for (std::size_t k = 0; k <= 250; ++k) {
    EXPECT_NEAR(run.trajectory.steps[k].success_prob, oracle[k], 1e-9);
  }
  EXPECT_LE(run.trajectory.max_success(), 0.05);
}

TEST(Grover, NonUniformPreparation) {
  // alpha of a product preparation, and the closed form with that alpha.
  QubitLayer layer;
  for (int k = 0; k < 8; ++k) layer.gates.push_back(ry_gate(0.4 + 0.1 * k));
  const auto u = UnitaryFamily::qubit_product(256, {layer});
  const TargetSet t(256, {255});
  const double alpha = target_projection(prepare(u), t);
  const std::size_t z[] = {0};
  const auto run = run_amplitude_amplification(u, build_selective_inversion(256, z),
                                               build_selective_inversion(256, t.indices()), 10, t);
  for (const auto& step : run.trajectory.steps) {
    EXPECT_NEAR(step.success_prob, std::pow(std::sin((2.0 * step.step + 1.0) * std::asin(alpha)), 2),
                1e-10);
  }
}

TEST(Grover, DimensionMismatch) {
  const auto u = UnitaryFamily::walsh_hadamard(8);
  EXPECT_THROW(AmplitudeAmplifier(u, DiagonalPhaseOp::identity(4), DiagonalPhaseOp::identity(8)),
               DimensionError);
}

TEST(Trajectory, Accessors) {
  RunTrajectory t;
  EXPECT_EQ(t.max_success(), 0.0);
  t.record(0, 0, 0.5);
  t.record(1, 1, 0.9);
  t.record(2, 2, 0.1);
  EXPECT_NEAR(t.max_success(), 0.81, 1e-15);
  EXPECT_NEAR(t.final_success(), 0.01, 1e-15);
}
