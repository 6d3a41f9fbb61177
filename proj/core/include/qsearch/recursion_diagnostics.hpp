#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qsearch/phase_ops.hpp"

namespace qsearch {

/// Per-target quantities of the first recursion level.
struct TargetDiagnostics {
  std::size_t index = 0;
  /// |U_j0| == 0: ratios are undefined and the target is excluded.
  bool excluded = false;
  Complex u_j0;
  double epsilon = 0.0;   // phi_j - pi
  double xi_prime = 0.0;  // xi - eps_j + mu_0/2
  /// |<j|psi'>/U_j0|; equals rho in the S_0 = R_0 special case.
  double psi_prime_ratio = 0.0;
  /// |(U_1)_j0 / U_j0| from direct application of U S_0 U^dagger S_t U.
  double rho = 0.0;
  /// cos(gamma_j) = |<j|U S_0' U^dagger|j>|.
  double gamma = 0.0;
  /// C_1j, C_2j, C_3j with exact phases and sin(gamma); rho = |C1+C2+C3|.
  std::array<Complex, 3> c_terms{};
  /// |<x_j|y>|, to be compared with the random-vector expectation 1/sqrt(N).
  double xy_overlap = 0.0;
  /// Both sides of gamma_j beta_bar / sqrt(N) << 3 |U_j0|.
  double condition_lhs = 0.0;
  double condition_rhs = 0.0;
  bool condition_holds = false;
};

/// Everything the first-level analysis of the recursion is built from.
struct RecursionDiagnostics {
  double alpha = 0.0;        // alpha_U
  Complex beta;              // <0|U^dagger S_t U|0>
  double xi = 0.0;           // arg beta
  double mu_0 = 0.0;         // S_0 phase at |0> minus pi
  double beta_prime = 0.0;   // cos(mu_0/2) |beta|
  double beta_bar = 0.0;     // sqrt(1 - |beta|^2)
  double kappa = 0.0;        // alpha_{U_1} / alpha_U, measured
  /// max |eps_j| and max |mu_j| actually present in S_t and S_0.
  double delta_t = 0.0;
  double delta_0 = 0.0;
  /// Pearson correlation of the S_t and S_0 phase offsets over all indices;
  /// flagged when |r| > 0.5, since the |x_j>/|y> randomness argument then fails.
  double offset_correlation = 0.0;
  bool correlated_offsets = false;
  std::vector<TargetDiagnostics> targets;

  /// 1 - Re(beta) <= 0.5 dt^2 + 2 alpha^2 and |Im beta| <= dt.
  bool beta_bounds_hold(double delta_t) const;
  /// beta_bar <= sqrt(dt^2 + 4 alpha^2) + 1e-9.
  bool beta_bar_bound_holds(double delta_t) const;
  /// 3 - |<j|psi'>/U_j0| <= kappa deficit bound, for every included target.
  bool ratio_bound_holds(double delta_t, double delta_0) const;
  bool condition_holds_for_all() const;
};

/// "<<" in the sufficient condition is read as lhs <= rhs / 10.
inline constexpr double kConditionMargin = 0.1;

/// Requires diagonal S_0 and S_t so the offsets eps_j and mu_j are defined.
RecursionDiagnostics compute_recursion_diagnostics(const Operator& u,
                                                   const DiagonalPhaseOp& s0,
                                                   const DiagonalPhaseOp& st,
                                                   const TargetSet& targets);

}  // namespace qsearch
