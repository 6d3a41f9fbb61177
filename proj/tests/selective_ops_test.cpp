#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qsearch/conjugated_op.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/noise.hpp"
#include "qsearch/phase_ops.hpp"
#include "qsearch/random.hpp"

using namespace qsearch;
using std::numbers::pi;

TEST(SelectiveRotation, ZeroInversion) {
  const std::size_t z[] = {0};
  const auto op = build_selective_rotation(8, z, pi);
  EXPECT_EQ(op.phase(0), pi);
  for (std::size_t j = 1; j < 8; ++j) EXPECT_EQ(op.phase(j), 0.0);
  StateVector s(8);
  apply(op, s);
  EXPECT_NEAR(std::abs(s[0] + 1.0), 0.0, 1e-15);
}

TEST(SelectiveRotation, PerIndexAngles) {
  const std::size_t idx[] = {2, 5};
  const double angles[] = {pi / 2, pi / 3};
  const auto op = build_selective_rotation(8, idx, angles);
  const double expected[] = {0, 0, pi / 2, 0, 0, pi / 3, 0, 0};
  for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(op.phase(j), expected[j]);
}

TEST(SelectiveRotation, Errors) {
  const std::size_t bad[] = {8};
  EXPECT_THROW(build_selective_rotation(8, bad, pi), std::out_of_range);
  const std::size_t idx[] = {1, 2};
  const double one[] = {0.1};
  EXPECT_THROW(build_selective_rotation(8, idx, one), std::invalid_argument);
}

TEST(DiagonalOp, ConjugateComposesToIdentity) {
  const DiagonalPhaseOp op({0.1, -2.0, 3.0, 0.7});
  const auto id = op.compose(op.conjugate());
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(id.phase(j), 0.0);
}

TEST(PerturbedInversion, ZeroNoiseIsExact) {
  NoiseSpec noise;
  const std::size_t t[] = {3};
  const auto op = sample_perturbed_inversion(16, t, noise, SelectiveKind::target);
  const auto ideal = build_selective_inversion(16, t);
  for (std::size_t j = 0; j < 16; ++j) EXPECT_EQ(op.phase(j), ideal.phase(j));
}

TEST(PerturbedInversion, Deterministic) {
  NoiseSpec noise{0.2, 0.1, NoiseLaw::uniform, 1234, {}, {}};
  const std::size_t t[] = {3, 9};
  const auto a = sample_perturbed_inversion(1024, t, noise, SelectiveKind::target);
  const auto b = sample_perturbed_inversion(1024, t, noise, SelectiveKind::target);
  for (std::size_t j = 0; j < 1024; ++j) EXPECT_EQ(a.phase(j), b.phase(j));
  const auto z = sample_perturbed_inversion(1024, t, noise, SelectiveKind::zero);
  EXPECT_NE(a.phase(5), z.phase(5));
}

TEST(PerturbedInversion, UniformStatistics) {
  NoiseSpec noise{0.2, 0.0, NoiseLaw::uniform, 99, {}, {}};
  const std::size_t t[] = {7};
  const auto op = sample_perturbed_inversion(1024, t, noise, SelectiveKind::target);
  double worst = 0.0, mean = 0.0;
  for (std::size_t j = 0; j < 1024; ++j) {
    const double eps = wrap_angle(op.phase(j) - (j == 7 ? pi : 0.0));
    worst = std::max(worst, std::abs(eps));
    mean += std::abs(eps);
  }
  mean /= 1024.0;
  EXPECT_LE(worst, 0.2);
  EXPECT_NEAR(mean, 0.1, 0.02);
}

TEST(PerturbedInversion, FixedOffsetAndList) {
  NoiseSpec fixed{0.05, 0.0, NoiseLaw::fixed_offset, 0, {}, {}};
  const std::size_t t[] = {1};
  const auto op = sample_perturbed_inversion(4, t, fixed, SelectiveKind::target);
  EXPECT_DOUBLE_EQ(op.phase(0), 0.05);
  EXPECT_DOUBLE_EQ(op.phase(1), pi + 0.05);

  NoiseSpec list{0.1, 0.0, NoiseLaw::per_index_list, 0, {0.1, -0.1, 0.0, 0.05}, {}};
  const auto l = sample_perturbed_inversion(4, t, list, SelectiveKind::target);
  EXPECT_DOUBLE_EQ(l.phase(3), 0.05);
  list.offsets_t[2] = 0.2;
  EXPECT_THROW(sample_perturbed_inversion(4, t, list, SelectiveKind::target), std::invalid_argument);
}

TEST(PerturbedInversion, RejectsDeltaPi) {
  NoiseSpec noise{pi, 0.0, NoiseLaw::uniform, 0, {}, {}};
  const std::size_t t[] = {1};
  EXPECT_THROW(sample_perturbed_inversion(4, t, noise, SelectiveKind::target), std::invalid_argument);
}

TEST(NoiseSpec, TextRoundTrip) {
  NoiseSpec noise{0.1, 0.30000000000000004, NoiseLaw::per_index_list, 18446744073709551615ull,
                  {0.1, -1e-17}, {1.0 / 3.0, 0.0}};
  EXPECT_EQ(NoiseSpec::parse(noise.to_text()), noise);
}

TEST(OperatorDistance, Examples) {
  const std::size_t t[] = {2};
  EXPECT_EQ(operator_distance(build_selective_inversion(8, t), t), 0.0);
  auto op = build_selective_inversion(8, t).with_phase(2, pi + 0.2);
  EXPECT_NEAR(operator_distance(op, t), 2.0 * std::sin(0.1), 1e-15);
  EXPECT_NEAR(operator_distance(op, t), 0.1996668332936563, 1e-15);
  std::vector<double> shifted(8, pi);
  shifted[2] = 0.0;
  EXPECT_NEAR(operator_distance(DiagonalPhaseOp(shifted), t), 2.0, 1e-15);
}

TEST(WrapAngle, Range) {
  EXPECT_DOUBLE_EQ(wrap_angle(pi), pi);
  EXPECT_DOUBLE_EQ(wrap_angle(-pi), pi);
  EXPECT_NEAR(wrap_angle(3 * pi + 0.1), -pi + 0.1, 1e-14);
}

TEST(Conjugated, IdentityBasisIsCore) {
  const DiagonalPhaseOp core({0.1, 0.2, 0.3, 0.4});
  const ConjugatedOp op(UnitaryFamily::identity(4), core);
  const StateVector r = random_state(4, 2);
  StateVector a = r, b = r;
  apply(op, a);
  apply(core, b);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(a[j], b[j]);
}

TEST(Conjugated, InverseRoundTrip) {
  const auto basis = UnitaryFamily::dense(haar_unitary(16, 3));
  std::vector<double> phases(16);
  for (std::size_t j = 0; j < 16; ++j) phases[j] = 0.3 * static_cast<double>(j);
  const ConjugatedOp op(basis, DiagonalPhaseOp(phases));
  const StateVector r = random_state(16, 4);
  StateVector s = r;
  apply(op, s);
  apply(op.inverse(), s);
  EXPECT_GE(fidelity(r, s), 1.0 - 1e-10);
  StateVector t = r;
  apply(op, t);
  apply(op, t, true);
  EXPECT_GE(fidelity(r, t), 1.0 - 1e-10);
}

TEST(Conjugated, MatchesDenseProduct) {
  const DenseMatrix e = haar_unitary(16, 8);
  std::vector<double> phases(16);
  for (std::size_t j = 0; j < 16; ++j) phases[j] = std::sin(static_cast<double>(j));
  const ConjugatedOp op(UnitaryFamily::dense(e), DiagonalPhaseOp(phases));
  Eigen::VectorXcd d(16);
  for (int j = 0; j < 16; ++j) d[j] = std::polar(1.0, phases[j]);
  const DenseMatrix full = e * d.asDiagonal() * e.adjoint();
  for (std::size_t k = 0; k < 16; ++k) {
    StateVector col = StateVector::basis(16, k);
    apply(op, col);
    for (std::size_t j = 0; j < 16; ++j) {
      EXPECT_LE(std::abs(col[j] - full(static_cast<int>(j), static_cast<int>(k))), 1e-11);
    }
  }
}

TEST(Conjugated, DimensionMismatch) {
  EXPECT_THROW(ConjugatedOp(UnitaryFamily::identity(8), DiagonalPhaseOp::identity(4)),
               DimensionError);
}

TEST(Selectivity, Diagnostics) {
  EXPECT_DOUBLE_EQ(selectivity_diagnostics(UnitaryFamily::identity(8), 3), 1.0);
  const auto w = UnitaryFamily::dense(hadamard_matrix(16));
  EXPECT_NEAR(selectivity_diagnostics(w, 0), 0.25, 1e-15);
  EXPECT_LT(selectivity_diagnostics(w, 0), kSelectivityWarnThreshold);
  const auto near = UnitaryFamily::dense(near_identity_unitary(64, 0.1, 5));
  EXPECT_GE(selectivity_diagnostics(near, 0), 0.9);
}
