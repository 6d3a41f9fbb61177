#include "qsearch/nondiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qsearch/errors.hpp"
#include "qsearch/iterative_search.hpp"

namespace qsearch {

namespace {

double max_deviation(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
  return worst;
}

// E_Q applied to a V-form state.
StateVector lift(const UnitaryFamily& e_q, StateVector v_state) {
  apply(e_q, v_state);
  return v_state;
}

std::string selectivity_warning(const char* which, double value) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%s basis is not selective: |diagonal element| = %.6f < %.2f", which, value,
                kSelectivityWarnThreshold);
  return buf;
}

}  // namespace

NonDiagonalRun run_nondiagonal_scenario(const UnitaryFamily& e_p, const UnitaryFamily& e_q,
                                        const DiagonalPhaseOp& s0_core,
                                        const DiagonalPhaseOp& st_core,
                                        const UnitaryFamily& u, const TargetSet& targets,
                                        EngineMode mode, double varphi, unsigned levels) {
  const std::size_t dim = u.dim();
  if (e_p.dim() != dim || e_q.dim() != dim || s0_core.dim() != dim || st_core.dim() != dim ||
      targets.dim() != dim) {
    throw DimensionError("nondiagonal scenario: dimension mismatch");
  }
  if (dim > kMaxDenseDim) throw CapabilityError("nondiagonal scenario: N exceeds 4096");

  NonDiagonalRun run;
  run.selectivity_p = selectivity_diagnostics(e_p, 0);
  run.selectivity_q = 1.0;
  for (std::size_t t : targets.indices()) {
    run.selectivity_q = std::min(run.selectivity_q, selectivity_diagnostics(e_q, t));
  }
  if (run.selectivity_p < kSelectivityWarnThreshold) {
    run.warnings.push_back(selectivity_warning("E_P", run.selectivity_p));
  }
  if (run.selectivity_q < kSelectivityWarnThreshold) {
    run.warnings.push_back(selectivity_warning("E_Q", run.selectivity_q));
  }

  const ConjugatedOp p(e_p, s0_core);
  const ConjugatedOp q(e_q, st_core);

  // V = E_Q^dagger U E_P: E_P acts first.
  const OperatorSequence v({{std::make_shared<const UnitaryFamily>(e_p), false},
                            {std::make_shared<const UnitaryFamily>(u), false},
                            {std::make_shared<const UnitaryFamily>(e_q), true}});
  // V E_P^dagger |0> = E_Q^dagger U|0>.
  StateVector v_start(dim);
  apply(e_p, v_start, true);

  if (mode == EngineMode::iterative) {
    IterativeRun it = run_iterative(u, q, p, varphi, targets);
    run.iterations = it.iterations;
    run.trajectory = std::move(it.trajectory);

    const IterativeOperator direct(u, q, p, varphi);
    const IterativeOperator v_form(v, st_core, s0_core, varphi);
    StateVector d = prepare(u);
    StateVector w = v_start;
    apply(v, w);
    run.v_form_deviation = max_deviation(d, lift(e_q, w));
    for (std::size_t k = 1; k <= run.iterations; ++k) {
      direct.apply(d);
      v_form.apply(w);
      run.v_form_deviation = std::max(run.v_form_deviation, max_deviation(d, lift(e_q, w)));
    }
  } else {
    RecursiveRun rec = run_recursive(u, p, q, targets, levels);
    run.iterations = rec.kappa.size();
    run.trajectory = std::move(rec.trajectory);

    const RecursiveSearch direct(u, p, q);
    const RecursiveSearch v_form(v, s0_core, st_core);
    StateVector d = prepare(u);
    StateVector w = v_start;
    apply(v, w);
    run.v_form_deviation = max_deviation(d, lift(e_q, w));
    std::uint64_t qd = 0, qv = 0;
    for (unsigned level = 1; level <= run.iterations; ++level) {
      direct.advance(d, level, qd);
      v_form.advance(w, level, qv);
      run.v_form_deviation = std::max(run.v_form_deviation, max_deviation(d, lift(e_q, w)));
    }
  }
  return run;
}

}  // namespace qsearch
