#include "qsearch/unitary.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

Gate2 ry_gate(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return {Complex(c), Complex(-s), Complex(s), Complex(c)};
}

Gate2 rz_gate(double angle) {
  return {std::polar(1.0, -angle / 2.0), Complex(0.0), Complex(0.0),
          std::polar(1.0, angle / 2.0)};
}

namespace {

Gate2 adjoint(const Gate2& g) {
  return {std::conj(g[0]), std::conj(g[2]), std::conj(g[1]), std::conj(g[3])};
}

void check_gate(const Gate2& g) {
  // Columns orthonormal.
  const double n0 = std::norm(g[0]) + std::norm(g[2]);
  const double n1 = std::norm(g[1]) + std::norm(g[3]);
  const Complex cross = std::conj(g[0]) * g[1] + std::conj(g[2]) * g[3];
  if (std::abs(n0 - 1.0) > 1e-10 || std::abs(n1 - 1.0) > 1e-10 || std::abs(cross) > 1e-10) {
    throw std::invalid_argument("qubit_product: gate is not unitary");
  }
}

void apply_gate(std::span<Complex> amps, unsigned qubit, const Gate2& g) {
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t n = amps.size();
  for (std::size_t block = 0; block < n; block += 2 * stride) {
    for (std::size_t k = block; k < block + stride; ++k) {
      const Complex a0 = amps[k];
      const Complex a1 = amps[k + stride];
      amps[k] = g[0] * a0 + g[1] * a1;
      amps[k + stride] = g[2] * a0 + g[3] * a1;
    }
  }
}

void apply_layer(std::span<Complex> amps, const ProductLayer& layer, bool adj) {
  if (std::holds_alternative<WalshLayer>(layer)) {
    apply_walsh_hadamard(amps);
    return;
  }
  const auto& gates = std::get<QubitLayer>(layer).gates;
  for (unsigned q = 0; q < gates.size(); ++q) {
    apply_gate(amps, q, adj ? adjoint(gates[q]) : gates[q]);
  }
}

void check_span(std::span<Complex> amps, std::size_t dim) {
  if (amps.size() != dim) throw DimensionError("UnitaryFamily: dimension mismatch");
}

}  // namespace

UnitaryFamily UnitaryFamily::walsh_hadamard(std::size_t dim) {
  require_power_of_two(dim, "UnitaryFamily::walsh_hadamard");
  return UnitaryFamily(Kind::walsh_hadamard, dim);
}

UnitaryFamily UnitaryFamily::qubit_product(std::size_t dim, std::vector<ProductLayer> layers) {
  require_power_of_two(dim, "UnitaryFamily::qubit_product");
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  for (const auto& layer : layers) {
    if (const auto* q = std::get_if<QubitLayer>(&layer)) {
      if (q->gates.size() != n) {
        throw std::invalid_argument("qubit_product: need one gate per qubit (" +
                                    std::to_string(n) + ")");
      }
      for (const auto& g : q->gates) check_gate(g);
    }
  }
  UnitaryFamily u(Kind::qubit_product, dim);
  u.layers_ = std::move(layers);
  return u;
}

UnitaryFamily UnitaryFamily::dense(DenseMatrix matrix) {
  const auto dim = static_cast<std::size_t>(matrix.rows());
  if (matrix.rows() != matrix.cols()) throw DimensionError("UnitaryFamily::dense: matrix not square");
  require_power_of_two(dim, "UnitaryFamily::dense");
  if (dim > kMaxDenseDim) {
    throw CapabilityError("dense unitary of dimension " + std::to_string(dim) +
                          " exceeds the limit of " + std::to_string(kMaxDenseDim));
  }
  const double defect = unitarity_defect(matrix);
  if (defect > 1e-10) {
    throw std::invalid_argument("UnitaryFamily::dense: matrix is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
  UnitaryFamily u(Kind::dense, dim);
  u.matrix_ = std::make_shared<const DenseMatrix>(std::move(matrix));
  return u;
}

UnitaryFamily UnitaryFamily::identity(std::size_t dim) {
  return qubit_product(dim, {});
}

void UnitaryFamily::apply_forward(std::span<Complex> amps) const {
  check_span(amps, dim_);
  switch (kind_) {
    case Kind::walsh_hadamard:
      apply_walsh_hadamard(amps);
      break;
    case Kind::qubit_product:
      for (const auto& layer : layers_) apply_layer(amps, layer, false);
      break;
    case Kind::dense: {
      Eigen::Map<Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
      v = (*matrix_ * v).eval();
      break;
    }
  }
}

void UnitaryFamily::apply_adjoint(std::span<Complex> amps) const {
  check_span(amps, dim_);
  switch (kind_) {
    case Kind::walsh_hadamard:
      apply_walsh_hadamard(amps);
      break;
    case Kind::qubit_product:
      for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) apply_layer(amps, *it, true);
      break;
    case Kind::dense: {
      Eigen::Map<Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
      v = (matrix_->adjoint() * v).eval();
      break;
    }
  }
}

DenseMatrix UnitaryFamily::to_dense() const {
  if (kind_ == Kind::dense) return *matrix_;
  if (dim_ > kMaxDenseDim) {
    throw CapabilityError("to_dense: dimension " + std::to_string(dim_) + " exceeds the limit");
  }
  DenseMatrix m(dim_, dim_);
  std::vector<Complex> col(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    std::fill(col.begin(), col.end(), Complex(0.0));
    col[c] = 1.0;
    apply_forward(col);
    for (std::size_t r = 0; r < dim_; ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r];
    }
  }
  return m;
}

const DenseMatrix& UnitaryFamily::matrix() const {
  if (kind_ != Kind::dense) throw std::logic_error("UnitaryFamily::matrix: not a dense unitary");
  return *matrix_;
}

TensorIdentity::TensorIdentity(std::shared_ptr<const Operator> inner, std::size_t ancilla_dim)
    : inner_(std::move(inner)), ancilla_dim_(ancilla_dim) {
  require_power_of_two(ancilla_dim, "TensorIdentity");
}

void TensorIdentity::apply_forward(std::span<Complex> amps) const {
  const std::size_t n = inner_->dim();
  if (amps.size() != n * ancilla_dim_) throw DimensionError("TensorIdentity: dimension mismatch");
  for (std::size_t a = 0; a < ancilla_dim_; ++a) inner_->apply_forward(amps.subspan(a * n, n));
}

void TensorIdentity::apply_adjoint(std::span<Complex> amps) const {
  const std::size_t n = inner_->dim();
  if (amps.size() != n * ancilla_dim_) throw DimensionError("TensorIdentity: dimension mismatch");
  for (std::size_t a = 0; a < ancilla_dim_; ++a) inner_->apply_adjoint(amps.subspan(a * n, n));
}

void apply_unitary(StateVector& state, const UnitaryFamily& u, bool inverse) {
  apply(u, state, inverse);
}

}  // namespace qsearch
