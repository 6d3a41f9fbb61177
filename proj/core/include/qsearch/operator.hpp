#pragma once

#include <cstddef>
#include <span>

#include "qsearch/state_vector.hpp"

namespace qsearch {

/// A unitary that can be applied forward and as its exact adjoint.
///
/// Every building block of the search engines (state preparations U,
/// selective transformations S_t / S_0, conjugated operators, workspace
/// oracles) implements this interface, so the engines never need to know
/// whether an oracle is diagonal.
class Operator {
 public:
  virtual ~Operator() = default;

  virtual std::size_t dim() const noexcept = 0;
  virtual void apply_forward(std::span<Complex> amps) const = 0;
  virtual void apply_adjoint(std::span<Complex> amps) const = 0;

 protected:
  Operator() = default;
  Operator(const Operator&) = default;
  Operator& operator=(const Operator&) = default;
  Operator(Operator&&) = default;
  Operator& operator=(Operator&&) = default;
};

/// Checks dims, then applies `op` (or its adjoint) to `state`.
void apply(const Operator& op, StateVector& state, bool adjoint = false);

/// op|0>, the initial state of every search.
StateVector prepare(const Operator& op);

}  // namespace qsearch

#include <memory>
#include <vector>

namespace qsearch {

/// Applies a list of operators in order: the first entry acts first.
class OperatorSequence final : public Operator {
 public:
  struct Factor {
    std::shared_ptr<const Operator> op;
    bool adjoint = false;
  };

  explicit OperatorSequence(std::vector<Factor> factors);

  std::size_t dim() const noexcept override { return dim_; }
  void apply_forward(std::span<Complex> amps) const override;
  void apply_adjoint(std::span<Complex> amps) const override;

 private:
  std::vector<Factor> factors_;
  std::size_t dim_;
};

}  // namespace qsearch
