#include "qsearch/recursive_search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

RecursiveSearch::RecursiveSearch(const Operator& u, const Operator& s0, const Operator& st)
    : u_(u), s0_(s0), st_(st) {
  if (s0.dim() != u.dim() || st.dim() != u.dim()) {
    throw DimensionError("RecursiveSearch: dimension mismatch");
  }
}

void RecursiveSearch::apply_level(StateVector& state, unsigned level,
                                  std::uint64_t& queries) const {
  if (level == 0) {
    apply(u_, state);
    return;
  }
  apply_level(state, level - 1, queries);
  apply(st_, state);
  ++queries;
  apply_level_adjoint(state, level - 1, queries);
  apply(s0_, state);
  apply_level(state, level - 1, queries);
}

void RecursiveSearch::apply_level_adjoint(StateVector& state, unsigned level,
                                          std::uint64_t& queries) const {
  if (level == 0) {
    apply(u_, state, true);
    return;
  }
  apply_level_adjoint(state, level - 1, queries);
  apply(s0_, state, true);
  apply_level(state, level - 1, queries);
  apply(st_, state, true);
  ++queries;
  apply_level_adjoint(state, level - 1, queries);
}

void RecursiveSearch::advance(StateVector& state, unsigned level, std::uint64_t& queries) const {
  if (level == 0) throw std::invalid_argument("RecursiveSearch::advance: level must be >= 1");
  apply(st_, state);
  ++queries;
  apply_level_adjoint(state, level - 1, queries);
  apply(s0_, state);
  apply_level(state, level - 1, queries);
}

std::uint64_t recursion_query_count(unsigned m) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t q = 0;
  for (unsigned l = 0; l < m; ++l) {
    if (q > (max - 1) / 3) {
      throw std::overflow_error("recursion_query_count: level " + std::to_string(m) +
                                " overflows 64 bits");
    }
    q = 3 * q + 1;
  }
  return q;
}

std::uint64_t recursion_base_applications(unsigned m) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t p = 1;
  for (unsigned l = 0; l < m; ++l) {
    if (p > max / 3) throw std::overflow_error("recursion_base_applications: overflow");
    p *= 3;
  }
  return p;
}

RecursiveRun run_recursive(const Operator& u, const Operator& s0, const Operator& st,
                           const TargetSet& targets, unsigned levels, RecursionBudget budget) {
  if (targets.dim() != u.dim()) throw DimensionError("run_recursive: target dimension mismatch");
  const RecursiveSearch search(u, s0, st);
  RecursiveRun run{{}, prepare(u), {}};
  std::uint64_t queries = 0;
  std::uint64_t used = 1;
  double alpha = target_projection(run.state, targets);
  run.trajectory.record(0, queries, alpha);

  for (unsigned level = 1; level <= levels; ++level) {
    // Going from U_{l-1}|0> to U_l|0> costs 2 * 3^{l-1} base applications.
    std::uint64_t cost = 0;
    try {
      cost = 2 * recursion_base_applications(level - 1);
    } catch (const std::overflow_error&) {
      run.trajectory.truncated = true;
      break;
    }
    if (cost > budget.max_base_applications - std::min(used, budget.max_base_applications)) {
      run.trajectory.truncated = true;
      break;
    }
    used += cost;
    search.advance(run.state, level, queries);
    const double next = target_projection(run.state, targets);
    run.kappa.push_back(alpha > 0.0 ? next / alpha : 0.0);
    alpha = next;
    run.trajectory.record(level, queries, alpha);
  }
  return run;
}

double kappa_bar(double delta_t, double delta_0) {
  return 3.0 - (7.0 / 3.0) * delta_t * delta_t - (2.0 / 3.0) * delta_t * delta_0 -
         (1.0 / 3.0) * delta_0 * delta_0;
}

double kappa_lower_bound(double delta_t, double delta_0, double alpha) {
  return kappa_bar(delta_t, delta_0) - 4.0 * alpha * alpha;
}

ExponentEstimate exponent_p(double delta_t, double delta_0) {
  ExponentEstimate e;
  e.kappa_bar = kappa_bar(delta_t, delta_0);
  if (!(e.kappa_bar > 1.0)) {
    throw DegenerateError("exponent_p: kappa_bar <= 1, noise too large for the bound");
  }
  e.p = std::log(3.0) / std::log(e.kappa_bar) - 1.0;
  e.closed_form_bound =
      0.71 * delta_t * delta_t + 0.20 * delta_t * delta_0 + 0.10 * delta_0 * delta_0;
  e.bound_holds = e.p <= e.closed_form_bound;
  return e;
}

unsigned levels_for_success(double alpha, double delta_t, double delta_0, double c) {
  if (!(alpha > 0.0) || !(c > 0.0) || c > 1.0) {
    throw std::invalid_argument("levels_for_success: need alpha > 0 and 0 < c <= 1");
  }
  const double kb = kappa_bar(delta_t, delta_0);
  if (!(kb > 1.0)) throw DegenerateError("levels_for_success: kappa_bar <= 1");
  const double goal = std::sqrt(c);
  unsigned m = 0;
  for (double a = alpha; a < goal && m < 64; a *= kb) ++m;
  return m;
}

}  // namespace qsearch
