#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qsearch/recursive_search.hpp"
#include "qsearch/unitary.hpp"

namespace qsearch {

/// Search register coupled to a w-qubit workspace through an imperfect
/// oracle Q = sum_j |j><j| (x) (A if f(j) = 1 else B).
struct WorkspaceSpec {
  unsigned search_qubits = 0;
  unsigned ancilla_qubits = 0;
  DenseMatrix a_op;  // 2^w x 2^w
  DenseMatrix b_op;  // 2^w x 2^w, identity for a clean workspace

  std::size_t search_dim() const noexcept { return std::size_t{1} << search_qubits; }
  std::size_t ancilla_dim() const noexcept { return std::size_t{1} << ancilla_qubits; }
  std::size_t joint_dim() const noexcept { return search_dim() * ancilla_dim(); }

  bool b_is_identity(double tol = 1e-12) const;

  /// w <= 4, joint dimension <= 2^20, A and B unitary of size 2^w.
  void validate() const;
};

inline constexpr unsigned kMaxAncillaQubits = 4;
inline constexpr std::size_t kMaxJointDim = std::size_t{1} << 20;

/// The joint-space oracle, ancilla-major layout (index = a * N + j).
class WorkspaceOracle final : public Operator {
 public:
  WorkspaceOracle(const WorkspaceSpec& spec, const TargetSet& targets);

  std::size_t dim() const noexcept override { return search_dim_ * ancilla_dim_; }
  void apply_forward(std::span<Complex> amps) const override;
  void apply_adjoint(std::span<Complex> amps) const override;

 private:
  void apply_blocks(std::span<Complex> amps, bool adjoint) const;

  std::size_t search_dim_;
  std::size_t ancilla_dim_;
  std::vector<bool> marked_;
  DenseMatrix a_;
  DenseMatrix b_;
};

/// Joint target set {a * N + j : j in T, all a}; its projection is the
/// search-space marginal success amplitude.
TargetSet joint_targets(const WorkspaceSpec& spec, const TargetSet& targets);

/// Largest eigenphase distance of A from pi and of B from 0: the joint-space
/// Delta_t of the oracle.
double workspace_oracle_delta(const WorkspaceSpec& spec);

enum class EngineMode { iterative, recursive };

const char* to_string(EngineMode mode) noexcept;

struct WorkspaceRun {
  RunTrajectory trajectory;
  double marginal_success = 0.0;
  /// Recursive mode only.
  std::vector<double> kappa;
  std::vector<double> kappa_bounds;
  double delta_t = 0.0;
  std::size_t iterations = 0;
};

/// Runs the chosen engine with U (x) I, the joint oracle, and the selective
/// rotation of |0>|0_w> by varphi. Iterative mode requires B = I.
WorkspaceRun run_workspace_scenario(const WorkspaceSpec& ws, const UnitaryFamily& u,
                                    const TargetSet& targets, double varphi,
                                    EngineMode mode, unsigned levels = 0);

}  // namespace qsearch
