#include "qsearch/workspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qsearch/errors.hpp"
#include "qsearch/iterative_search.hpp"

namespace qsearch {

namespace {

constexpr double kUnitaryTol = 1e-10;

double max_eigenphase_offset(const DenseMatrix& m, double centre) {
  Eigen::ComplexEigenSolver<DenseMatrix> solver(m);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    worst = std::max(worst, std::abs(wrap_angle(std::arg(solver.eigenvalues()[k]) - centre)));
  }
  return worst;
}

}  // namespace

bool WorkspaceSpec::b_is_identity(double tol) const {
  if (b_op.rows() != b_op.cols()) return false;
  const DenseMatrix diff = b_op - DenseMatrix::Identity(b_op.rows(), b_op.cols());
  return diff.cwiseAbs().maxCoeff() <= tol;
}

void WorkspaceSpec::validate() const {
  if (ancilla_qubits > kMaxAncillaQubits) {
    throw CapabilityError("workspace: at most " + std::to_string(kMaxAncillaQubits) +
                          " ancilla qubits");
  }
  if (search_qubits + ancilla_qubits > 20) {
    throw CapabilityError("workspace: joint dimension exceeds 2^20");
  }
  const auto w = static_cast<Eigen::Index>(ancilla_dim());
  if (a_op.rows() != w || a_op.cols() != w || b_op.rows() != w || b_op.cols() != w) {
    throw DimensionError("workspace: A and B must be 2^w x 2^w");
  }
  if (unitarity_defect(a_op) > kUnitaryTol) throw std::invalid_argument("workspace: A is not unitary");
  if (unitarity_defect(b_op) > kUnitaryTol) throw std::invalid_argument("workspace: B is not unitary");
}

WorkspaceOracle::WorkspaceOracle(const WorkspaceSpec& spec, const TargetSet& targets)
    : search_dim_(spec.search_dim()),
      ancilla_dim_(spec.ancilla_dim()),
      marked_(spec.search_dim(), false),
      a_(spec.a_op),
      b_(spec.b_op) {
  spec.validate();
  if (targets.dim() != search_dim_) throw DimensionError("WorkspaceOracle: target dimension mismatch");
  for (std::size_t j : targets.indices()) marked_[j] = true;
}

void WorkspaceOracle::apply_blocks(std::span<Complex> amps, bool adjoint) const {
  if (amps.size() != dim()) throw DimensionError("WorkspaceOracle: dimension mismatch");
  const DenseMatrix a = adjoint ? DenseMatrix(a_.adjoint()) : a_;
  const DenseMatrix b = adjoint ? DenseMatrix(b_.adjoint()) : b_;
  const bool b_trivial = (b - DenseMatrix::Identity(b.rows(), b.cols())).cwiseAbs().maxCoeff() == 0.0;
  const auto w = ancilla_dim_;
  Complex in[16];
  Complex out[16];
  for (std::size_t j = 0; j < search_dim_; ++j) {
    if (!marked_[j] && b_trivial) continue;
    const DenseMatrix& m = marked_[j] ? a : b;
    for (std::size_t r = 0; r < w; ++r) in[r] = amps[r * search_dim_ + j];
    for (std::size_t r = 0; r < w; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < w; ++c) {
        acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      }
      out[r] = acc;
    }
    for (std::size_t r = 0; r < w; ++r) amps[r * search_dim_ + j] = out[r];
  }
}

void WorkspaceOracle::apply_forward(std::span<Complex> amps) const { apply_blocks(amps, false); }

void WorkspaceOracle::apply_adjoint(std::span<Complex> amps) const { apply_blocks(amps, true); }

TargetSet joint_targets(const WorkspaceSpec& spec, const TargetSet& targets) {
  std::vector<std::size_t> joint;
  joint.reserve(targets.count() * spec.ancilla_dim());
  for (std::size_t a = 0; a < spec.ancilla_dim(); ++a) {
    for (std::size_t j : targets.indices()) joint.push_back(a * spec.search_dim() + j);
  }
  return TargetSet(spec.joint_dim(), std::move(joint));
}

double workspace_oracle_delta(const WorkspaceSpec& spec) {
  return std::max(max_eigenphase_offset(spec.a_op, std::numbers::pi),
                  max_eigenphase_offset(spec.b_op, 0.0));
}

const char* to_string(EngineMode mode) noexcept {
  return mode == EngineMode::iterative ? "iterative" : "recursive";
}

WorkspaceRun run_workspace_scenario(const WorkspaceSpec& ws, const UnitaryFamily& u,
                                    const TargetSet& targets, double varphi,
                                    EngineMode mode, unsigned levels) {
  ws.validate();
  if (u.dim() != ws.search_dim()) throw DimensionError("workspace: U dimension mismatch");
  if (mode == EngineMode::iterative && !ws.b_is_identity()) {
    throw ConfigError("b_op",
                      "iterative mode requires B = I; with B != I the iterative algorithm "
                      "cannot take us to a target state");
  }
  const auto base = std::make_shared<const UnitaryFamily>(u);
  const TensorIdentity joint_u(base, ws.ancilla_dim());
  const WorkspaceOracle oracle(ws, targets);
  const TargetSet joint = joint_targets(ws, targets);
  const std::size_t zero[] = {0};

  WorkspaceRun run;
  run.delta_t = workspace_oracle_delta(ws);
  if (mode == EngineMode::iterative) {
    const DiagonalPhaseOp r0 = build_selective_rotation(ws.joint_dim(), zero, varphi);
    IterativeRun it = run_iterative(joint_u, oracle, r0, varphi, joint);
    run.trajectory = std::move(it.trajectory);
    run.iterations = it.iterations;
  } else {
    const DiagonalPhaseOp s0 = build_selective_inversion(ws.joint_dim(), zero);
    RecursiveRun rec = run_recursive(joint_u, s0, oracle, joint, levels);
    for (std::size_t l = 0; l < rec.kappa.size(); ++l) {
      run.kappa_bounds.push_back(
          kappa_lower_bound(run.delta_t, 0.0, rec.trajectory.steps[l].alpha));
    }
    run.kappa = std::move(rec.kappa);
    run.trajectory = std::move(rec.trajectory);
    run.iterations = levels;
  }
  run.marginal_success = run.trajectory.empty() ? 0.0 : run.trajectory.final_success();
  return run;
}

}  // namespace qsearch
