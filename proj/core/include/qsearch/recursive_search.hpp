#pragma once

#include <cstdint>
#include <vector>

#include "qsearch/amplitude_amplification.hpp"

namespace qsearch {

/// Applies U_m = U_{m-1} S_0 U_{m-1}^dagger S_t U_{m-1}, U_0 = U, as a call
/// tree on one state vector. No operator matrix is ever formed.
class RecursiveSearch {
 public:
  RecursiveSearch(const Operator& u, const Operator& s0, const Operator& st);

  /// state <- U_level state. Adds the S_t / S_t^dagger uses to `queries`.
  void apply_level(StateVector& state, unsigned level, std::uint64_t& queries) const;
  /// state <- U_level^dagger state.
  void apply_level_adjoint(StateVector& state, unsigned level,
                           std::uint64_t& queries) const;

  /// Given U_{level-1}|0> in `state`, produces U_level|0>.
  void advance(StateVector& state, unsigned level, std::uint64_t& queries) const;

 private:
  const Operator& u_;
  const Operator& s0_;
  const Operator& st_;
};

struct RecursionBudget {
  /// Upper bound on applications of the base U / U^dagger. 3^m per level m.
  std::uint64_t max_base_applications = std::uint64_t{1} << 32;
};

struct RecursiveRun {
  /// One record per completed level; step = level.
  RunTrajectory trajectory;
  /// U_l|0> for the last completed level.
  StateVector state;
  /// kappa_l = alpha_{U_l} / alpha_{U_{l-1}}, for l = 1..completed levels.
  std::vector<double> kappa;
};

RecursiveRun run_recursive(const Operator& u, const Operator& s0, const Operator& st,
                           const TargetSet& targets, unsigned levels,
                           RecursionBudget budget = {});

/// q_m = (3^m - 1) / 2. Throws std::overflow_error past 64 bits.
std::uint64_t recursion_query_count(unsigned m);

/// Number of base U / U^dagger applications in U_m: 3^m.
std::uint64_t recursion_base_applications(unsigned m);

/// 3 - (7/3) dt^2 - (2/3) dt d0 - (1/3) d0^2.
double kappa_bar(double delta_t, double delta_0);

/// kappa_bar(delta_t, delta_0) - 4 alpha^2.
double kappa_lower_bound(double delta_t, double delta_0, double alpha);

struct ExponentEstimate {
  double kappa_bar = 0.0;
  /// log 3 / log kappa_bar - 1.
  double p = 0.0;
  /// 0.71 dt^2 + 0.20 dt d0 + 0.10 d0^2.
  double closed_form_bound = 0.0;
  bool bound_holds = false;
};

/// Throws DegenerateError when kappa_bar <= 1.
ExponentEstimate exponent_p(double delta_t, double delta_0);

/// Smallest m with alpha * kappa_bar^m >= sqrt(c), the stopping level for a
/// target success probability c.
unsigned levels_for_success(double alpha, double delta_t, double delta_0, double c);

}  // namespace qsearch
