#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsearch {

using Complex = std::complex<double>;

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

/// Throws DimensionError unless `dim` is a power of two.
void require_power_of_two(std::size_t dim, const char* what);

/// N complex amplitudes of an n-qubit register, N = 2^n.
///
/// Kernels mutate the amplitudes in place; callers that need the input
/// preserved copy the vector first.
class StateVector {
 public:
  /// The computational basis state |0>.
  explicit StateVector(std::size_t dim);

  static StateVector basis(std::size_t dim, std::size_t index);

  /// Takes ownership of `amps`; the norm must be 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amps);

  std::size_t dim() const noexcept { return amps_.size(); }
  unsigned num_qubits() const noexcept;

  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  Complex& operator[](std::size_t i) noexcept { return amps_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return amps_[i]; }

  double norm() const noexcept;

 private:
  explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}

  std::vector<Complex> amps_;
};

/// The marked items T as a sorted set of distinct indices, 1 <= M < N.
class TargetSet {
 public:
  TargetSet(std::size_t dim, std::vector<std::size_t> indices);
  TargetSet(std::size_t dim, std::initializer_list<std::size_t> indices)
      : TargetSet(dim, std::vector<std::size_t>(indices)) {}

  /// The single index {0}; used for the |0> selective operators.
  static TargetSet zero(std::size_t dim) { return TargetSet(dim, {0}); }

  /// `count` distinct indices drawn with the counter-based generator.
  static TargetSet random(std::size_t dim, std::size_t count, std::uint64_t seed);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t count() const noexcept { return indices_.size(); }
  std::span<const std::size_t> indices() const noexcept { return indices_; }
  bool contains(std::size_t index) const noexcept;

 private:
  std::size_t dim_;
  std::vector<std::size_t> indices_;
};

/// Normalized fast Walsh-Hadamard transform, in place, O(N log N).
void apply_walsh_hadamard(std::span<Complex> amps);
void apply_walsh_hadamard(StateVector& state);

/// <a|b> = sum_j conj(a_j) b_j.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// alpha = sqrt(sum_{j in T} |amp_j|^2); the success probability is alpha^2.
double target_projection(const StateVector& state, const TargetSet& targets);

}  // namespace qsearch
