#include "qsearch/recursion_diagnostics.hpp"

#include <cmath>
#include <numbers>

#include "qsearch/errors.hpp"
#include "qsearch/recursive_search.hpp"

namespace qsearch {

namespace {

constexpr double kSlack = 1e-12;

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const auto n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ma += a[k];
    mb += b[k];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sab += (a[k] - ma) * (b[k] - mb);
    saa += (a[k] - ma) * (a[k] - ma);
    sbb += (b[k] - mb) * (b[k] - mb);
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

bool RecursionDiagnostics::beta_bounds_hold(double dt) const {
  return 1.0 - beta.real() <= 0.5 * dt * dt + 2.0 * alpha * alpha + kSlack &&
         std::abs(beta.imag()) <= dt + kSlack;
}

bool RecursionDiagnostics::beta_bar_bound_holds(double dt) const {
  return beta_bar <= std::sqrt(dt * dt + 4.0 * alpha * alpha) + 1e-9;
}

bool RecursionDiagnostics::ratio_bound_holds(double dt, double d0) const {
  const double deficit = 3.0 - kappa_lower_bound(dt, d0, alpha);
  for (const auto& t : targets) {
    if (!t.excluded && 3.0 - t.psi_prime_ratio > deficit + kSlack) return false;
  }
  return true;
}

bool RecursionDiagnostics::condition_holds_for_all() const {
  for (const auto& t : targets) {
    if (!t.excluded && !t.condition_holds) return false;
  }
  return true;
}

RecursionDiagnostics compute_recursion_diagnostics(const Operator& u, const DiagonalPhaseOp& s0,
                                                   const DiagonalPhaseOp& st,
                                                   const TargetSet& targets) {
  const std::size_t dim = u.dim();
  if (s0.dim() != dim || st.dim() != dim || targets.dim() != dim) {
    throw DimensionError("compute_recursion_diagnostics: dimension mismatch");
  }
  RecursionDiagnostics d;
  const StateVector u0 = prepare(u);
  d.alpha = target_projection(u0, targets);

  // |psi> = S_t U|0>, beta = <0|U^dag|psi>.
  StateVector psi = u0;
  apply(st, psi);
  d.beta = inner_product(u0, psi);
  d.xi = std::arg(d.beta);
  const double phase0 = s0.phase(0);
  d.mu_0 = wrap_angle(phase0 - std::numbers::pi);
  d.beta_prime = std::cos(d.mu_0 / 2.0) * std::abs(d.beta);
  d.beta_bar = std::sqrt(std::max(0.0, 1.0 - std::norm(d.beta)));

  // |psi'> = U R0^{phase0} U^dag |psi>.
  StateVector psi_prime = psi;
  apply(u, psi_prime, true);
  psi_prime[0] *= std::polar(1.0, phase0);
  apply(u, psi_prime);

  // U_1|0> = U S_0 U^dag |psi>, applied directly.
  StateVector u1 = psi;
  apply(u, u1, true);
  apply(s0, u1);
  apply(u, u1);
  d.kappa = d.alpha > 0.0 ? target_projection(u1, targets) / d.alpha : 0.0;

  // |psi'> = e^{i phase0} (beta U|0> + beta_bar |y>).
  StateVector y = psi_prime;
  {
    const Complex back = std::polar(1.0, -phase0);
    auto ya = y.amplitudes();
    for (std::size_t j = 0; j < dim; ++j) ya[j] = back * ya[j] - d.beta * u0[j];
    if (d.beta_bar > 0.0) {
      for (auto& a : ya) a /= d.beta_bar;
    }
  }

  std::vector<double> eps(dim), mu(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    eps[j] = wrap_angle(st.phase(j) - (targets.contains(j) ? std::numbers::pi : 0.0));
    mu[j] = wrap_angle(s0.phase(j) - (j == 0 ? std::numbers::pi : 0.0));
    d.delta_t = std::max(d.delta_t, std::abs(eps[j]));
    d.delta_0 = std::max(d.delta_0, std::abs(mu[j]));
  }
  d.offset_correlation = pearson(eps, mu);
  d.correlated_offsets = std::abs(d.offset_correlation) > 0.5;

  const DiagonalPhaseOp s0_rest = s0.with_phase(0, 0.0);
  const Complex e_phase0 = std::polar(1.0, phase0);
  const double sqrt_n = std::sqrt(static_cast<double>(dim));

  for (std::size_t j : targets.indices()) {
    TargetDiagnostics t;
    t.index = j;
    t.u_j0 = u0[j];
    t.epsilon = eps[j];
    t.xi_prime = d.xi - t.epsilon + d.mu_0 / 2.0;
    if (std::abs(t.u_j0) == 0.0) {
      t.excluded = true;
      d.targets.push_back(t);
      continue;
    }
    t.psi_prime_ratio = std::abs(psi_prime[j] / t.u_j0);
    t.rho = std::abs(u1[j] / t.u_j0);

    // Row j of U S_0' U^dag: w = (U S_0' U^dag)^dag |j>.
    StateVector w = StateVector::basis(dim, j);
    apply(u, w, true);
    apply(s0_rest, w, true);
    apply(u, w);
    const Complex wj = w[j];
    const double cos_g = std::abs(wj);
    double sin_g = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      if (k != j) sin_g += std::norm(w[k]);
    }
    sin_g = std::sqrt(sin_g);
    t.gamma = std::atan2(sin_g, cos_g);

    const Complex phi_j = std::polar(1.0, st.phase(j));
    t.c_terms[0] = cos_g * phi_j * (1.0 + 2.0 * d.beta_prime * std::polar(1.0, t.xi_prime));
    if (sin_g > 0.0) {
      // |x_j> = (e^{i eta} w - cos(gamma)|j>) / sin(gamma), e^{i eta} = conj(w_j)/|w_j|.
      const Complex align = cos_g > 0.0 ? std::conj(wj) / cos_g : Complex(1.0);
      auto xa = w.amplitudes();
      for (std::size_t k = 0; k < dim; ++k) xa[k] *= align;
      xa[j] -= cos_g;
      for (auto& a : xa) a /= sin_g;
      const Complex x_u0 = inner_product(w, u0);
      const Complex x_y = inner_product(w, y);
      t.xy_overlap = std::abs(x_y);
      t.c_terms[1] = sin_g * e_phase0 * d.beta * x_u0 / t.u_j0;
      t.c_terms[2] = sin_g * e_phase0 * d.beta_bar * x_y / t.u_j0;
    }
    t.condition_lhs = t.gamma * d.beta_bar / sqrt_n;
    t.condition_rhs = 3.0 * std::abs(t.u_j0);
    t.condition_holds = t.condition_lhs <= kConditionMargin * t.condition_rhs;
    d.targets.push_back(t);
  }
  return d;
}

}  // namespace qsearch
