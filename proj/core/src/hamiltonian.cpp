#include "qsearch/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

namespace {

Eigen::VectorXcd to_eigen(const StateVector& state) {
  const auto a = state.amplitudes();
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

StateVector from_eigen(const Eigen::VectorXcd& v) {
  std::vector<Complex> amps(v.data(), v.data() + v.size());
  // Renormalize against accumulated rounding from the basis change.
  double n2 = 0.0;
  for (const auto& a : amps) n2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= inv;
  return StateVector::from_amplitudes(std::move(amps));
}

void require_dense_dim(std::size_t dim) {
  if (dim > kMaxDenseDim) {
    throw CapabilityError("search Hamiltonian: dimension " + std::to_string(dim) +
                          " exceeds dense limit " + std::to_string(kMaxDenseDim));
  }
}

// I - |v><v|
DenseMatrix projector_complement(const Eigen::VectorXcd& v) {
  const auto n = v.size();
  DenseMatrix h = DenseMatrix::Identity(n, n);
  h.noalias() -= v * v.adjoint();
  return h;
}

void symmetrize(DenseMatrix& h) {
  DenseMatrix sym = 0.5 * (h + h.adjoint());
  h = std::move(sym);
}

}  // namespace

SearchHamiltonian::SearchHamiltonian(HamiltonianKind kind, DenseMatrix matrix, double s)
    : kind_(kind), matrix_(std::move(matrix)), s_(s) {}

SearchHamiltonian SearchHamiltonian::fg(const UnitaryFamily& u, const TargetSet& targets,
                                        double s) {
  const std::size_t dim = u.dim();
  require_dense_dim(dim);
  if (targets.dim() != dim) throw DimensionError("fg Hamiltonian: dimension mismatch");
  const StateVector u0 = prepare(u);
  const double alpha = target_projection(u0, targets);
  if (alpha <= 0.0) throw DegenerateError("fg Hamiltonian: U|0> has no target component");
  Eigen::VectorXcd t = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t j : targets.indices()) t[static_cast<Eigen::Index>(j)] = u0[j] / alpha;

  DenseMatrix h = (1.0 - s) * projector_complement(to_eigen(u0)) +
                  (1.0 + s) * projector_complement(t);
  symmetrize(h);
  return SearchHamiltonian(s == 0.0 ? HamiltonianKind::fg : HamiltonianKind::fg_perturbed,
                           std::move(h), s);
}

SearchHamiltonian SearchHamiltonian::new_search(const UnitaryFamily& u,
                                                const DiagonalPhaseOp& rt) {
  const std::size_t dim = u.dim();
  require_dense_dim(dim);
  if (rt.dim() != dim) throw DimensionError("new Hamiltonian: dimension mismatch");
  const StateVector u0 = prepare(u);
  const DenseMatrix first = projector_complement(to_eigen(u0));
  Eigen::VectorXcd phases(static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) phases[static_cast<Eigen::Index>(j)] = std::polar(1.0, rt.phase(j));
  // Rt^dagger H Rt, elementwise conj(r_j) H_jk r_k.
  DenseMatrix second = phases.conjugate().asDiagonal() * first * phases.asDiagonal();
  DenseMatrix h = first + second;
  symmetrize(h);
  return SearchHamiltonian(HamiltonianKind::new_search, std::move(h), 0.0);
}

SearchHamiltonian SearchHamiltonian::scaled(double factor) const {
  return SearchHamiltonian(kind_, matrix_ * factor, s_);
}

void SearchHamiltonian::decompose() const {
  if (spectrum_) return;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(matrix_);
  if (solver.info() != Eigen::Success) {
    throw DegenerateError("search Hamiltonian: eigendecomposition failed");
  }
  auto sp = std::make_shared<Spectrum>();
  sp->values = solver.eigenvalues();
  sp->vectors = solver.eigenvectors();
  spectrum_ = std::move(sp);
}

const Eigen::VectorXd& SearchHamiltonian::eigenvalues() const {
  decompose();
  return spectrum_->values;
}

const DenseMatrix& SearchHamiltonian::eigenvectors() const {
  decompose();
  return spectrum_->vectors;
}

double SearchHamiltonian::norm_estimate() const {
  return eigenvalues().cwiseAbs().maxCoeff();
}

SearchHamiltonian build_hamiltonian(HamiltonianKind kind, const UnitaryFamily& u,
                                    const TargetSet& targets, double s,
                                    const DiagonalPhaseOp* rt) {
  switch (kind) {
    case HamiltonianKind::fg:
      return SearchHamiltonian::fg(u, targets, 0.0);
    case HamiltonianKind::fg_perturbed:
      return SearchHamiltonian::fg(u, targets, s);
    case HamiltonianKind::new_search:
      if (rt == nullptr) {
        const DiagonalPhaseOp inversion = build_selective_inversion(u.dim(), targets.indices());
        return SearchHamiltonian::new_search(u, inversion);
      }
      return SearchHamiltonian::new_search(u, *rt);
  }
  throw std::invalid_argument("build_hamiltonian: unknown kind");
}

StateVector evolve(const SearchHamiltonian& h, const StateVector& state, double time,
                   double step) {
  if (state.dim() != h.dim()) throw DimensionError("evolve: dimension mismatch");
  if (time == 0.0) return state;
  const auto& values = h.eigenvalues();
  const auto& vectors = h.eigenvectors();
  Eigen::VectorXcd c = vectors.adjoint() * to_eigen(state);

  if (step <= 0.0) {
    for (Eigen::Index k = 0; k < c.size(); ++k) c[k] *= std::polar(1.0, -values[k] * time);
  } else {
    const double limit = 0.05 / std::max(h.norm_estimate(), 1e-300);
    if (step > limit * (1.0 + 1e-12)) {
      throw std::invalid_argument("evolve: step exceeds 0.05 / ||H||");
    }
    const double sign = time < 0.0 ? -1.0 : 1.0;
    double remaining = std::abs(time);
    Eigen::VectorXcd kick(c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) kick[k] = std::polar(1.0, -values[k] * sign * step);
    while (remaining >= step) {
      c = c.cwiseProduct(kick);
      remaining -= step;
    }
    for (Eigen::Index k = 0; k < c.size(); ++k) c[k] *= std::polar(1.0, -values[k] * sign * remaining);
  }
  return from_eigen(vectors * c);
}

ProbeSubspace ProbeSubspace::of_targets(const TargetSet& targets) {
  ProbeSubspace p;
  p.indices.assign(targets.indices().begin(), targets.indices().end());
  return p;
}

ProbeSubspace ProbeSubspace::of_direction(StateVector direction) {
  ProbeSubspace p;
  p.directions.push_back(std::move(direction));
  return p;
}

namespace {

class Scanner {
 public:
  Scanner(const SearchHamiltonian& h, const StateVector& initial, const ProbeSubspace& probe)
      : values_(h.eigenvalues()), vectors_(h.eigenvectors()), probe_(probe) {
    c0_ = vectors_.adjoint() * to_eigen(initial);
    for (const auto& d : probe.directions) {
      if (d.dim() != initial.dim()) throw DimensionError("scan: probe dimension mismatch");
      // <d|V, so that <d|psi(t)> = (<d|V) c(t).
      rows_.push_back(vectors_.transpose() * to_eigen(d).conjugate());
    }
    for (std::size_t j : probe.indices) {
      if (j >= initial.dim()) throw DimensionError("scan: probe index out of range");
    }
  }

  double probability(double t) const {
    Eigen::VectorXcd c(c0_.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = c0_[k] * std::polar(1.0, -values_[k] * t);
    double p = 0.0;
    for (std::size_t j : probe_.indices) {
      p += std::norm(vectors_.row(static_cast<Eigen::Index>(j)).dot(c.conjugate()));
    }
    for (const auto& r : rows_) p += std::norm(r.dot(c.conjugate()));
    return p;
  }

 private:
  const Eigen::VectorXd& values_;
  const DenseMatrix& vectors_;
  const ProbeSubspace& probe_;
  Eigen::VectorXcd c0_;
  std::vector<Eigen::VectorXcd> rows_;
};

}  // namespace

ScanResult scan_target_probability(const SearchHamiltonian& h, const StateVector& initial,
                                   const ProbeSubspace& probe, double t_max,
                                   std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("scan: need at least 2 samples");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw std::invalid_argument("scan: t_max must be positive");
  if (initial.dim() != h.dim()) throw DimensionError("scan: dimension mismatch");
  const Scanner scanner(h, initial, probe);

  ScanResult result;
  result.samples.reserve(samples);
  const double dt = t_max / static_cast<double>(samples - 1);
  std::size_t best = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = dt * static_cast<double>(k);
    result.samples.push_back({t, scanner.probability(t)});
    if (result.samples[k].probability > result.samples[best].probability) best = k;
  }

  // Golden-section search on the bracket around the best sample.
  double lo = best == 0 ? 0.0 : result.samples[best - 1].time;
  double hi = best + 1 == samples ? t_max : result.samples[best + 1].time;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = scanner.probability(x1), f2 = scanner.probability(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-12 * std::max(1.0, t_max); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = scanner.probability(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = scanner.probability(x1);
    }
  }
  ScanPoint refined = f1 > f2 ? ScanPoint{x1, f1} : ScanPoint{x2, f2};
  result.peak = refined.probability >= result.samples[best].probability ? refined
                                                                         : result.samples[best];
  return result;
}

double leakage_from_span(const StateVector& state, const StateVector& a, const StateVector& b) {
  if (state.dim() != a.dim() || state.dim() != b.dim()) {
    throw DimensionError("leakage_from_span: dimension mismatch");
  }
  // Gram-Schmidt on {a, b}, then the residual of state.
  const std::size_t n = state.dim();
  std::vector<Complex> e1(a.amplitudes().begin(), a.amplitudes().end());
  std::vector<Complex> e2(b.amplitudes().begin(), b.amplitudes().end());
  auto normalize = [](std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    s = std::sqrt(s);
    if (s < 1e-14) return false;
    for (auto& x : v) x /= s;
    return true;
  };
  const bool has1 = normalize(e1);
  if (has1) {
    const Complex c = inner_product(e1, e2);
    for (std::size_t j = 0; j < n; ++j) e2[j] -= c * e1[j];
  }
  const bool has2 = normalize(e2);
  std::vector<Complex> r(state.amplitudes().begin(), state.amplitudes().end());
  if (has1) {
    const Complex c = inner_product(e1, r);
    for (std::size_t j = 0; j < n; ++j) r[j] -= c * e1[j];
  }
  if (has2) {
    const Complex c = inner_product(e2, r);
    for (std::size_t j = 0; j < n; ++j) r[j] -= c * e2[j];
  }
  double s = 0.0;
  for (const auto& x : r) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace qsearch
