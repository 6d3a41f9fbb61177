#include "qsearch/random.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace qsearch {

double CounterRng::normal(std::uint64_t k) const noexcept {
  // 1 - u keeps the logarithm finite.
  const double u1 = 1.0 - uniform(2 * k);
  const double u2 = uniform(2 * k + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

DenseMatrix ginibre(std::size_t dim, std::uint64_t seed, std::uint64_t stream) {
  const CounterRng rng(seed, stream);
  DenseMatrix z(dim, dim);
  std::uint64_t k = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      const double re = rng.normal(k++);
      const double im = rng.normal(k++);
      z(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(re, im) * (1.0 / std::numbers::sqrt2);
    }
  }
  return z;
}

}  // namespace

StateVector random_state(std::size_t dim, std::uint64_t seed) {
  require_power_of_two(dim, "random_state");
  const CounterRng rng(seed, 0x5eedu);
  std::vector<Complex> amps(dim);
  double sum = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    amps[j] = Complex(rng.normal(2 * j), rng.normal(2 * j + 1));
    sum += std::norm(amps[j]);
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& a : amps) a *= scale;
  return StateVector::from_amplitudes(std::move(amps));
}

DenseMatrix haar_unitary(std::size_t dim, std::uint64_t seed) {
  const DenseMatrix z = ginibre(dim, seed, 0x4aa2u);
  Eigen::HouseholderQR<DenseMatrix> qr(z);
  DenseMatrix q = qr.householderQ();
  const DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < r.rows(); ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0);
  }
  return q;
}

DenseMatrix near_identity_unitary(std::size_t dim, double angle, std::uint64_t seed) {
  const DenseMatrix g = ginibre(dim, seed, 0x4e49u);
  const DenseMatrix h = (g + g.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(h);
  const Eigen::VectorXd& w = eig.eigenvalues();
  const double scale = w.cwiseAbs().maxCoeff();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases(k) = std::polar(1.0, angle * w(k) / scale);
  }
  const DenseMatrix& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

DenseMatrix hadamard_matrix(std::size_t dim) {
  require_power_of_two(dim, "hadamard_matrix");
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  DenseMatrix h(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const bool odd = std::popcount(r & c) & 1;
      h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = odd ? -scale : scale;
    }
  }
  return h;
}

double unitarity_defect(const DenseMatrix& m) {
  const DenseMatrix gram = m.adjoint() * m;
  return (gram - DenseMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qsearch
