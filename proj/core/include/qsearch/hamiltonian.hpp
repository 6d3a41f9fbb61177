#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "qsearch/phase_ops.hpp"
#include "qsearch/unitary.hpp"

namespace qsearch {

enum class HamiltonianKind { fg, fg_perturbed, new_search };

/// Dense continuous-time search Hamiltonians built from projector terms
/// H_v = I - |v><v|.
///
///   fg            H_{U|0>} + H_{|t>}
///   fg_perturbed  (1 - s) H_{U|0>} + (1 + s) H_{|t>}
///   new_search    H_{U|0>} + Rt^dagger H_{U|0>} Rt
///
/// |t> is the normalized target-subspace component of U|0>. `scale`
/// multiplies the whole Hamiltonian (uniform calibration error).
class SearchHamiltonian {
 public:
  static SearchHamiltonian fg(const UnitaryFamily& u, const TargetSet& targets,
                              double s = 0.0);
  static SearchHamiltonian new_search(const UnitaryFamily& u, const DiagonalPhaseOp& rt);

  HamiltonianKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  double s() const noexcept { return s_; }
  const DenseMatrix& matrix() const noexcept { return matrix_; }

  SearchHamiltonian scaled(double factor) const;

  /// Eigen-decomposition, computed once on first use.
  const Eigen::VectorXd& eigenvalues() const;
  const DenseMatrix& eigenvectors() const;

  /// max |eigenvalue|.
  double norm_estimate() const;

 private:
  SearchHamiltonian(HamiltonianKind kind, DenseMatrix matrix, double s);
  void decompose() const;

  HamiltonianKind kind_;
  DenseMatrix matrix_;
  double s_ = 0.0;
  struct Spectrum {
    Eigen::VectorXd values;
    DenseMatrix vectors;
  };
  mutable std::shared_ptr<const Spectrum> spectrum_;
};

SearchHamiltonian build_hamiltonian(HamiltonianKind kind, const UnitaryFamily& u,
                                    const TargetSet& targets, double s = 0.0,
                                    const DiagonalPhaseOp* rt = nullptr);

/// |psi(time)> = exp(-i H time)|psi(0)>, accumulated over sub-intervals of
/// length `step` by phase multiplication in the eigenbasis.
/// Requires step <= 0.05 / ||H|| (or step == 0 for a single exact jump).
StateVector evolve(const SearchHamiltonian& h, const StateVector& state, double time,
                   double step = 0.0);

/// The subspace whose population is scanned: either basis indices (the
/// target subspace) or an explicit orthonormal direction such as |tau>.
struct ProbeSubspace {
  std::vector<std::size_t> indices;
  std::vector<StateVector> directions;

  static ProbeSubspace of_targets(const TargetSet& targets);
  static ProbeSubspace of_direction(StateVector direction);
};

struct ScanPoint {
  double time = 0.0;
  double probability = 0.0;
};

struct ScanResult {
  std::vector<ScanPoint> samples;
  /// Peak after golden-section refinement around the best sample.
  ScanPoint peak;
};

/// Probability of `probe` at `samples` uniformly spaced times in [0, t_max].
ScanResult scan_target_probability(const SearchHamiltonian& h, const StateVector& initial,
                                   const ProbeSubspace& probe, double t_max,
                                   std::size_t samples);

/// Norm of the component of `state` outside span{a, b}.
double leakage_from_span(const StateVector& state, const StateVector& a, const StateVector& b);

}  // namespace qsearch
