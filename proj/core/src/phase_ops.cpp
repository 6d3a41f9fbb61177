#include "qsearch/phase_ops.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

double wrap_angle(double angle) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(angle, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

DiagonalPhaseOp::DiagonalPhaseOp(std::vector<double> phases) : phases_(std::move(phases)) {
  require_power_of_two(phases_.size(), "DiagonalPhaseOp");
  factors_.reserve(phases_.size());
  for (double p : phases_) {
    if (!std::isfinite(p)) throw std::invalid_argument("DiagonalPhaseOp: non-finite phase");
    factors_.push_back(std::polar(1.0, p));
  }
}

DiagonalPhaseOp DiagonalPhaseOp::identity(std::size_t dim) {
  return DiagonalPhaseOp(std::vector<double>(dim, 0.0));
}

void DiagonalPhaseOp::apply_forward(std::span<Complex> amps) const {
  if (amps.size() != factors_.size()) throw DimensionError("DiagonalPhaseOp: dimension mismatch");
  for (std::size_t j = 0; j < amps.size(); ++j) amps[j] *= factors_[j];
}

void DiagonalPhaseOp::apply_adjoint(std::span<Complex> amps) const {
  if (amps.size() != factors_.size()) throw DimensionError("DiagonalPhaseOp: dimension mismatch");
  for (std::size_t j = 0; j < amps.size(); ++j) amps[j] *= std::conj(factors_[j]);
}

DiagonalPhaseOp DiagonalPhaseOp::conjugate() const {
  std::vector<double> neg(phases_.size());
  for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -phases_[j];
  return DiagonalPhaseOp(std::move(neg));
}

DiagonalPhaseOp DiagonalPhaseOp::compose(const DiagonalPhaseOp& other) const {
  if (other.dim() != dim()) throw DimensionError("DiagonalPhaseOp::compose: dimension mismatch");
  std::vector<double> sum(phases_.size());
  for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = phases_[j] + other.phases_[j];
  return DiagonalPhaseOp(std::move(sum));
}

DiagonalPhaseOp DiagonalPhaseOp::with_phase(std::size_t index, double phase) const {
  if (index >= dim()) throw std::out_of_range("DiagonalPhaseOp::with_phase: index out of range");
  std::vector<double> copy = phases_;
  copy[index] = phase;
  return DiagonalPhaseOp(std::move(copy));
}

void apply_diagonal(StateVector& state, const DiagonalPhaseOp& op) { apply(op, state); }

DiagonalPhaseOp build_selective_rotation(std::size_t dim, std::span<const std::size_t> indices,
                                         std::span<const double> angles) {
  if (indices.size() != angles.size()) {
    throw std::invalid_argument("build_selective_rotation: need one angle per index");
  }
  std::vector<double> phases(dim, 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= dim) {
      throw std::out_of_range("build_selective_rotation: index " + std::to_string(indices[k]) +
                              " out of range");
    }
    if (!std::isfinite(angles[k])) throw std::invalid_argument("build_selective_rotation: non-finite angle");
    phases[indices[k]] = angles[k];
  }
  return DiagonalPhaseOp(std::move(phases));
}

DiagonalPhaseOp build_selective_rotation(std::size_t dim, std::span<const std::size_t> indices,
                                         double angle) {
  const std::vector<double> angles(indices.size(), angle);
  return build_selective_rotation(dim, indices, angles);
}

DiagonalPhaseOp build_selective_inversion(std::size_t dim, std::span<const std::size_t> indices) {
  return build_selective_rotation(dim, indices, std::numbers::pi);
}

double operator_distance(const DiagonalPhaseOp& op, std::span<const std::size_t> indices) {
  std::vector<bool> marked(op.dim(), false);
  for (std::size_t j : indices) {
    if (j >= op.dim()) throw std::out_of_range("operator_distance: index out of range");
    marked[j] = true;
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < op.dim(); ++j) {
    const double eps = op.phase(j) - (marked[j] ? std::numbers::pi : 0.0);
    worst = std::max(worst, 2.0 * std::abs(std::sin(eps / 2.0)));
  }
  return worst;
}

}  // namespace qsearch
