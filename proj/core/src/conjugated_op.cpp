#include "qsearch/conjugated_op.hpp"

#include <cmath>

#include "qsearch/errors.hpp"

namespace qsearch {

ConjugatedOp::ConjugatedOp(UnitaryFamily basis, DiagonalPhaseOp core)
    : basis_(std::move(basis)), core_(std::move(core)) {
  if (basis_.dim() != core_.dim()) throw DimensionError("ConjugatedOp: dimension mismatch");
}

void ConjugatedOp::apply_forward(std::span<Complex> amps) const {
  basis_.apply_adjoint(amps);
  core_.apply_forward(amps);
  basis_.apply_forward(amps);
}

void ConjugatedOp::apply_adjoint(std::span<Complex> amps) const {
  basis_.apply_adjoint(amps);
  core_.apply_adjoint(amps);
  basis_.apply_forward(amps);
}

ConjugatedOp build_conjugated(const UnitaryFamily& basis, const DiagonalPhaseOp& core) {
  return ConjugatedOp(basis, core);
}

double selectivity_diagnostics(const UnitaryFamily& basis, std::size_t index) {
  if (index >= basis.dim()) throw std::out_of_range("selectivity_diagnostics: index out of range");
  if (basis.kind() == UnitaryFamily::Kind::dense) {
    const auto i = static_cast<Eigen::Index>(index);
    return std::abs(basis.matrix()(i, i));
  }
  StateVector col = StateVector::basis(basis.dim(), index);
  apply(basis, col);
  return std::abs(col[index]);
}

}  // namespace qsearch
