#include "qsearch/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "qsearch/errors.hpp"
#include "qsearch/operator.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

void require_power_of_two(std::size_t dim, const char* what) {
  if (!is_power_of_two(dim)) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(dim) +
                         " is not a power of two");
  }
}

StateVector::StateVector(std::size_t dim) : amps_(dim) {
  require_power_of_two(dim, "StateVector");
  amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  StateVector s(dim);
  if (index >= dim) throw std::out_of_range("StateVector::basis: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
  require_power_of_two(amps.size(), "StateVector::from_amplitudes");
  StateVector s(std::move(amps));
  if (std::abs(s.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("StateVector::from_amplitudes: amplitudes are not normalized");
  }
  return s;
}

unsigned StateVector::num_qubits() const noexcept {
  return static_cast<unsigned>(std::countr_zero(amps_.size()));
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

TargetSet::TargetSet(std::size_t dim, std::vector<std::size_t> indices)
    : dim_(dim), indices_(std::move(indices)) {
  require_power_of_two(dim, "TargetSet");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("TargetSet: duplicate index");
  }
  if (indices_.empty() || indices_.size() >= dim) {
    throw std::invalid_argument("TargetSet: need 1 <= M < N");
  }
  if (indices_.back() >= dim) throw std::out_of_range("TargetSet: index out of range");
}

TargetSet TargetSet::random(std::size_t dim, std::size_t count, std::uint64_t seed) {
  if (count == 0 || count >= dim) throw std::invalid_argument("TargetSet::random: need 1 <= M < N");
  // Partial Fisher-Yates; only displaced entries are stored.
  const CounterRng rng(seed, 0x7467u);
  std::unordered_map<std::size_t, std::size_t> displaced;
  auto at = [&](std::size_t i) {
    auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  std::vector<std::size_t> perm(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto span = static_cast<std::uint64_t>(dim - i);
    const std::size_t k = i + static_cast<std::size_t>(rng.bits(i) % span);
    const std::size_t vi = at(i);
    perm[i] = at(k);
    displaced[k] = vi;
  }
  return TargetSet(dim, std::move(perm));
}

bool TargetSet::contains(std::size_t index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void apply_walsh_hadamard(std::span<Complex> amps) {
  const std::size_t n = amps.size();
  require_power_of_two(n, "apply_walsh_hadamard");
  Complex* a = amps.data();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      Complex* lo = a + block;
      Complex* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const Complex x = lo[k];
        const Complex y = hi[k];
        lo[k] = x + y;
        hi[k] = x - y;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) a[k] *= scale;
}

void apply_walsh_hadamard(StateVector& state) { apply_walsh_hadamard(state.amplitudes()); }

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner_product: dimension mismatch");
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    // conj(a) * b
    re += a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
    im += a[j].real() * b[j].imag() - a[j].imag() * b[j].real();
  }
  return {re, im};
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  return inner_product(a.amplitudes(), b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

double target_projection(const StateVector& state, const TargetSet& targets) {
  if (state.dim() != targets.dim()) throw DimensionError("target_projection: dimension mismatch");
  double sum = 0.0;
  for (std::size_t j : targets.indices()) sum += std::norm(state[j]);
  return std::sqrt(sum);
}

void apply(const Operator& op, StateVector& state, bool adjoint) {
  if (op.dim() != state.dim()) {
    throw DimensionError("apply: operator dimension " + std::to_string(op.dim()) +
                         " does not match state dimension " + std::to_string(state.dim()));
  }
  if (adjoint) {
    op.apply_adjoint(state.amplitudes());
  } else {
    op.apply_forward(state.amplitudes());
  }
}

StateVector prepare(const Operator& op) {
  StateVector s(op.dim());
  op.apply_forward(s.amplitudes());
  return s;
}

OperatorSequence::OperatorSequence(std::vector<Factor> factors)
    : factors_(std::move(factors)), dim_(0) {
  if (factors_.empty()) throw std::invalid_argument("OperatorSequence: no factors");
  dim_ = factors_.front().op->dim();
  for (const auto& f : factors_) {
    if (f.op->dim() != dim_) throw DimensionError("OperatorSequence: dimension mismatch");
  }
}

void OperatorSequence::apply_forward(std::span<Complex> amps) const {
  for (const auto& f : factors_) {
    if (f.adjoint) {
      f.op->apply_adjoint(amps);
    } else {
      f.op->apply_forward(amps);
    }
  }
}

void OperatorSequence::apply_adjoint(std::span<Complex> amps) const {
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (it->adjoint) {
      it->op->apply_forward(amps);
    } else {
      it->op->apply_adjoint(amps);
    }
  }
}

}  // namespace qsearch
