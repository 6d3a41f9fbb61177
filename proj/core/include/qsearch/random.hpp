#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "qsearch/state_vector.hpp"

namespace qsearch {

using DenseMatrix = Eigen::MatrixXcd;

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so streams are reproducible in any language
/// and independent of evaluation order.
///
///   z  = seed + 0x9E3779B97F4A7C15 * (counter + 1) + 0xD1B54A32D192ED03 * stream
///   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^= z >> 31
///
/// (all arithmetic mod 2^64). The uniform double is (z >> 11) * 2^-53.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : seed_(seed), stream_(stream) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix(seed_ + 0x9E3779B97F4A7C15ULL * (counter + 1) +
               0xD1B54A32D192ED03ULL * stream_);
  }

  /// Uniform in [0, 1).
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1).
  constexpr double symmetric(std::uint64_t counter) const noexcept {
    return 2.0 * uniform(counter) - 1.0;
  }

  /// Standard normal via Box-Muller on counters 2k and 2k+1.
  double normal(std::uint64_t k) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

/// Random unit vector with complex Gaussian amplitudes.
StateVector random_state(std::size_t dim, std::uint64_t seed);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
DenseMatrix haar_unitary(std::size_t dim, std::uint64_t seed);

/// exp(i * angle * H) for a random Hermitian H scaled to unit spectral norm,
/// so that ||E - I|| <= angle.
DenseMatrix near_identity_unitary(std::size_t dim, double angle, std::uint64_t seed);

/// The dense normalized Walsh-Hadamard matrix, H[j][k] = (-1)^{popcount(j&k)} / sqrt(N).
DenseMatrix hadamard_matrix(std::size_t dim);

/// max_{jk} |M^dagger M - I|.
double unitarity_defect(const DenseMatrix& m);

}  // namespace qsearch
