#pragma once

#include <memory>

#include "qsearch/phase_ops.hpp"
#include "qsearch/unitary.hpp"

namespace qsearch {

/// Non-diagonal selective transformation E D E^dagger with D diagonal.
class ConjugatedOp final : public Operator {
 public:
  ConjugatedOp(UnitaryFamily basis, DiagonalPhaseOp core);

  std::size_t dim() const noexcept override { return core_.dim(); }
  void apply_forward(std::span<Complex> amps) const override;
  void apply_adjoint(std::span<Complex> amps) const override;

  const UnitaryFamily& basis() const noexcept { return basis_; }
  const DiagonalPhaseOp& core() const noexcept { return core_; }

  ConjugatedOp inverse() const { return ConjugatedOp(basis_, core_.conjugate()); }

 private:
  UnitaryFamily basis_;
  DiagonalPhaseOp core_;
};

ConjugatedOp build_conjugated(const UnitaryFamily& basis, const DiagonalPhaseOp& core);

/// |E_{index,index}|; a basis is treated as selective when this is >= 0.9.
double selectivity_diagnostics(const UnitaryFamily& basis, std::size_t index);

inline constexpr double kSelectivityWarnThreshold = 0.9;

}  // namespace qsearch
