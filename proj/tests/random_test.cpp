#include <cmath>

#include <gtest/gtest.h>

#include "qsearch/random.hpp"

using namespace qsearch;

// Reference values from an independent implementation of the documented
// recurrence.
TEST(CounterRng, FrozenStream) {
  const CounterRng rng(42, 0);
  EXPECT_EQ(rng.bits(0), 0xbdd732262feb6e95ULL);
  EXPECT_EQ(rng.bits(1), 0x28efe333b266f103ULL);
  EXPECT_EQ(rng.bits(2), 0x47526757130f9f52ULL);
  EXPECT_DOUBLE_EQ(rng.uniform(0), 0.7415648787718233);
  EXPECT_DOUBLE_EQ(rng.uniform(1), 0.1599103928769201);
  EXPECT_EQ(CounterRng(0, 1).bits(0), 0x2d0f28c7e7e786b2ULL);
}

TEST(CounterRng, RangesAndMoments) {
  const CounterRng rng(7, 3);
  double mean = 0.0, m2 = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform(static_cast<std::uint64_t>(k));
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double z = rng.normal(static_cast<std::uint64_t>(k));
    mean += z;
    m2 += z * z;
  }
  mean /= n;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(m2 / n, 1.0, 0.02);
}

TEST(RandomState, Normalized) {
  const auto s = random_state(256, 9);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  const auto t = random_state(256, 9);
  for (std::size_t j = 0; j < 256; ++j) EXPECT_EQ(s[j], t[j]);
}

TEST(Haar, Unitary) {
  EXPECT_LE(unitarity_defect(haar_unitary(64, 1)), 1e-12);
  EXPECT_GT((haar_unitary(8, 1) - haar_unitary(8, 2)).norm(), 0.1);
}

TEST(NearIdentity, WithinAngle) {
  for (double angle : {0.0, 0.05, 0.1}) {
    const DenseMatrix e = near_identity_unitary(32, angle, 4);
    EXPECT_LE(unitarity_defect(e), 1e-12);
    Eigen::JacobiSVD<DenseMatrix> svd(e - DenseMatrix::Identity(32, 32));
    EXPECT_LE(svd.singularValues()[0], angle + 1e-12);
  }
}

TEST(Hadamard, Entries) {
  const DenseMatrix h = hadamard_matrix(4);
  EXPECT_DOUBLE_EQ(h(3, 3).real(), 0.5);
  EXPECT_DOUBLE_EQ(h(1, 3).real(), -0.5);
  EXPECT_LE(unitarity_defect(h), 1e-15);
}
