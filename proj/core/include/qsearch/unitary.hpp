#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "qsearch/operator.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

/// Largest dimension for which dense matrices are accepted.
inline constexpr std::size_t kMaxDenseDim = 4096;

/// Row-major 2x2 single-qubit unitary.
using Gate2 = std::array<Complex, 4>;

Gate2 ry_gate(double angle);
Gate2 rz_gate(double angle);

/// One layer of a product-state preparer: either a full Walsh-Hadamard
/// transform or one 2x2 unitary per qubit (gate k acts on index bit k).
struct WalshLayer {};
struct QubitLayer {
  std::vector<Gate2> gates;
};
using ProductLayer = std::variant<WalshLayer, QubitLayer>;

/// The state preparation U of a search.
///
///   walsh_hadamard  W, the default uniform preparation
///   qubit_product   layers of per-qubit unitaries and WHTs; non-uniform
///                   |U_{j0}| at O(N log N)
///   dense           explicit N x N matrix, N <= 4096
class UnitaryFamily final : public Operator {
 public:
  enum class Kind { walsh_hadamard, qubit_product, dense };

  static UnitaryFamily walsh_hadamard(std::size_t dim);
  static UnitaryFamily qubit_product(std::size_t dim, std::vector<ProductLayer> layers);
  /// Verifies ||M^dagger M - I||_max <= 1e-10. Throws CapabilityError above 4096.
  static UnitaryFamily dense(DenseMatrix matrix);
  static UnitaryFamily identity(std::size_t dim);

  Kind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept override { return dim_; }

  void apply_forward(std::span<Complex> amps) const override;
  void apply_adjoint(std::span<Complex> amps) const override;

  /// Explicit matrix; only for dim <= 4096.
  DenseMatrix to_dense() const;

  /// Only valid for Kind::dense.
  const DenseMatrix& matrix() const;

 private:
  UnitaryFamily(Kind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  std::size_t dim_;
  std::vector<ProductLayer> layers_;
  std::shared_ptr<const DenseMatrix> matrix_;
};

/// U (x) I_w on the joint search (x) workspace register.
///
/// Joint amplitudes use the ancilla-major layout index = a * N + j, so the
/// search operator acts on each contiguous block of length N.
class TensorIdentity final : public Operator {
 public:
  TensorIdentity(std::shared_ptr<const Operator> inner, std::size_t ancilla_dim);

  std::size_t dim() const noexcept override { return inner_->dim() * ancilla_dim_; }
  void apply_forward(std::span<Complex> amps) const override;
  void apply_adjoint(std::span<Complex> amps) const override;

 private:
  std::shared_ptr<const Operator> inner_;
  std::size_t ancilla_dim_;
};

/// apply_unitary(state, u, inverse): state <- U state or U^dagger state.
void apply_unitary(StateVector& state, const UnitaryFamily& u, bool inverse);

}  // namespace qsearch
