#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsearch/operator.hpp"

namespace qsearch {

/// Diagonal unitary sum_j e^{i phi_j} |j><j|.
///
/// Houses every diagonal selective transformation: I_t, I_0, R_t, R_0^varphi
/// and the perturbed S_t, S_0.
class DiagonalPhaseOp final : public Operator {
 public:
  explicit DiagonalPhaseOp(std::vector<double> phases);
  static DiagonalPhaseOp identity(std::size_t dim);

  std::size_t dim() const noexcept override { return phases_.size(); }
  std::span<const double> phases() const noexcept { return phases_; }
  double phase(std::size_t j) const { return phases_[j]; }

  void apply_forward(std::span<Complex> amps) const override;
  void apply_adjoint(std::span<Complex> amps) const override;

  /// Phases negated; composes with *this to the identity.
  DiagonalPhaseOp conjugate() const;

  /// The operator with summed phases, i.e. other * this.
  DiagonalPhaseOp compose(const DiagonalPhaseOp& other) const;

  /// Copy with the phase at `index` replaced.
  DiagonalPhaseOp with_phase(std::size_t index, double phase) const;

 private:
  std::vector<double> phases_;
  std::vector<Complex> factors_;
};

/// ampsj <- e^{i phi_j} ampsj. Throws DimensionError on mismatch.
void apply_diagonal(StateVector& state, const DiagonalPhaseOp& op);

/// Phase `angles[k]` on `indices[k]`, 0 elsewhere. Angle pi on every listed
/// index gives the exact selective inversion.
DiagonalPhaseOp build_selective_rotation(std::size_t dim,
                                         std::span<const std::size_t> indices,
                                         std::span<const double> angles);
DiagonalPhaseOp build_selective_rotation(std::size_t dim,
                                         std::span<const std::size_t> indices,
                                         double angle);

/// Exact inversion of the listed indices (I_t, or I_0 for {0}).
DiagonalPhaseOp build_selective_inversion(std::size_t dim,
                                          std::span<const std::size_t> indices);

/// max_j |e^{i phi_j} - e^{i pi [j in indices]}| = 2 max_j |sin(eps_j / 2)|,
/// the operator-norm distance from the ideal inversion.
double operator_distance(const DiagonalPhaseOp& op,
                         std::span<const std::size_t> indices);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle) noexcept;

}  // namespace qsearch
