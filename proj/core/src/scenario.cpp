#include "qsearch/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/amplitude_amplification.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/iterative_search.hpp"
#include "qsearch/nondiagonal.hpp"
#include "qsearch/recursive_search.hpp"
#include "qsearch/workspace.hpp"

namespace qsearch {

void ScenarioSummary::add(std::string key, double value) {
  entries_.emplace_back(std::move(key), format_double(value));
}

void ScenarioSummary::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void ScenarioSummary::add_count(std::string key, std::uint64_t value) {
  entries_.emplace_back(std::move(key), std::to_string(value));
}

std::optional<std::string> ScenarioSummary::find(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

double ScenarioSummary::number(const std::string& key) const {
  const auto v = find(key);
  if (!v) throw std::out_of_range("summary has no entry '" + key + "'");
  return std::stod(*v);
}

std::string ScenarioSummary::to_text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + '\n';
  return out;
}

std::string ScenarioResult::csv(const SweepColumns& prefix, bool include_header) const {
  if (scan) return format_scan_csv(*scan, prefix, include_header);
  return format_trajectory_csv(trajectory, prefix, include_header);
}

namespace {

NoiseSpec effective_noise(const ExperimentConfig& config) {
  NoiseSpec noise = config.noise;
  if (noise.seed == 0) noise.seed = config.seed.value_or(0);
  return noise;
}

// Adds the sampled offsets of `which` to every phase of `base`.
DiagonalPhaseOp perturb(const DiagonalPhaseOp& base, const NoiseSpec& noise, SelectiveKind which) {
  const double delta = which == SelectiveKind::target ? noise.delta_t : noise.delta_0;
  if (delta == 0.0) return base;
  std::vector<double> phases(base.phases().begin(), base.phases().end());
  for (std::size_t j = 0; j < phases.size(); ++j) phases[j] += sample_offset(noise, which, j);
  return DiagonalPhaseOp(std::move(phases));
}

DiagonalPhaseOp target_rotation(const ExperimentConfig& config, const TargetSet& targets,
                                const NoiseSpec& noise) {
  const std::size_t n = config.dim();
  DiagonalPhaseOp base = config.phi_list.empty()
                             ? build_selective_rotation(n, targets.indices(), config.phi)
                             : build_selective_rotation(n, targets.indices(), config.phi_list);
  return perturb(base, noise, SelectiveKind::target);
}

DiagonalPhaseOp zero_rotation(const ExperimentConfig& config, const NoiseSpec& noise) {
  const std::size_t zero[] = {0};
  return perturb(build_selective_rotation(config.dim(), zero, config.varphi), noise,
                 SelectiveKind::zero);
}

void add_common(ScenarioSummary& s, const ExperimentConfig& config, const TargetSet& targets,
                double alpha) {
  s.add("scenario", to_string(config.scenario));
  s.add_count("n", config.dim());
  s.add_count("m_targets", targets.count());
  s.add("alpha_u", alpha);
}

void add_outcome(ScenarioSummary& s, const RunTrajectory& traj) {
  s.add_count("queries", traj.empty() ? 0 : traj.back().oracle_queries);
  s.add("success_final", traj.final_success());
  s.add("success_max", traj.max_success());
}

ScenarioResult run_amplification(const ExperimentConfig& config, bool mismatch) {
  const UnitaryFamily u = make_unitary(config);
  const TargetSet targets = make_targets(config);
  const NoiseSpec noise = effective_noise(config);
  const DiagonalPhaseOp st = target_rotation(config, targets, noise);
  const DiagonalPhaseOp s0 = zero_rotation(config, noise);
  const double alpha = target_projection(prepare(u), targets);
  const std::size_t n = config.iterations ? *config.iterations
                        : mismatch        ? std::size_t{250}
                                          : grover_iterations(alpha);
  SearchRun run = run_amplitude_amplification(u, s0, st, n, targets);

  ScenarioResult r;
  add_common(r.summary, config, targets, alpha);
  r.summary.add_count("iterations", n);
  add_outcome(r.summary, run.trajectory);
  const double closed = std::sin((2.0 * static_cast<double>(n) + 1.0) * std::asin(alpha));
  r.summary.add("success_closed_form_exact_phases", closed * closed);
  r.trajectory = std::move(run.trajectory);
  return r;
}

ScenarioResult run_iterative_scenario(const ExperimentConfig& config) {
  const UnitaryFamily u = make_unitary(config);
  const TargetSet targets = make_targets(config);
  const NoiseSpec noise = effective_noise(config);
  const DiagonalPhaseOp rt = target_rotation(config, targets, noise);
  const double alpha = target_projection(prepare(u), targets);

  IterativeRun run = noise.delta_0 == 0.0
                         ? run_iterative(u, rt, config.varphi, targets, config.iterations)
                         : [&] {
                             const DiagonalPhaseOp r0 = zero_rotation(config, noise);
                             return run_iterative(u, rt, r0, config.varphi, targets,
                                                  config.iterations);
                           }();

  ScenarioResult r;
  add_common(r.summary, config, targets, alpha);
  r.summary.add("theta_measured", run.frame.theta);
  r.summary.add_count("iterations", run.iterations);
  r.summary.add("queries_predicted", predict_iterative_queries(u, rt, config.varphi));
  add_outcome(r.summary, run.trajectory);

  double worst = 0.0;
  for (const auto& step : run.trajectory.steps) {
    const double predicted = predicted_rotation_angle(run.frame.theta, config.varphi, step.step);
    if (predicted >= std::numbers::pi / 2.0 - 0.1 || !step.angle_to_sigma) continue;
    worst = std::max(worst, std::abs(*step.angle_to_sigma - predicted));
  }
  r.summary.add("angle_max_deviation", worst);
  r.trajectory = std::move(run.trajectory);
  return r;
}

ScenarioResult run_recursive_scenario(const ExperimentConfig& config) {
  const UnitaryFamily u = make_unitary(config);
  const TargetSet targets = make_targets(config);
  const NoiseSpec noise = effective_noise(config);
  const std::size_t zero[] = {0};
  const DiagonalPhaseOp st =
      sample_perturbed_inversion(config.dim(), targets.indices(), noise, SelectiveKind::target);
  const DiagonalPhaseOp s0 = sample_perturbed_inversion(config.dim(), zero, noise, SelectiveKind::zero);
  const double alpha = target_projection(prepare(u), targets);

  RecursiveRun run =
      run_recursive(u, s0, st, targets, config.levels, RecursionBudget{config.budget});

  ScenarioResult r;
  add_common(r.summary, config, targets, alpha);
  r.summary.add_count("levels", config.levels);
  r.summary.add_count("levels_completed", run.kappa.size());
  r.summary.add("truncated", run.trajectory.truncated ? "true" : "false");
  for (std::size_t l = 0; l < run.kappa.size(); ++l) {
    const std::string tag = std::to_string(l + 1);
    r.summary.add("kappa_" + tag, run.kappa[l]);
    r.summary.add("kappa_bound_" + tag,
                  kappa_lower_bound(noise.delta_t, noise.delta_0, run.trajectory.steps[l].alpha));
    r.summary.add_count("queries_predicted_" + tag, recursion_query_count(static_cast<unsigned>(l + 1)));
    r.summary.add_count("queries_measured_" + tag, run.trajectory.steps[l + 1].oracle_queries);
  }
  add_outcome(r.summary, run.trajectory);
  r.summary.add("kappa_bar", kappa_bar(noise.delta_t, noise.delta_0));
  try {
    const ExponentEstimate e = exponent_p(noise.delta_t, noise.delta_0);
    r.summary.add("exponent_p", e.p);
    r.summary.add("exponent_p_closed_form", e.closed_form_bound);
    r.summary.add_count("levels_for_success_predicted",
                        levels_for_success(alpha, noise.delta_t, noise.delta_0, config.success_c));
  } catch (const DegenerateError& e) {
    r.warnings.push_back(e.what());
  }
  r.trajectory = std::move(run.trajectory);
  return r;
}

ScenarioResult run_hamiltonian_scenario(const ExperimentConfig& config) {
  const UnitaryFamily u = make_unitary(config);
  const TargetSet targets = make_targets(config);
  const NoiseSpec noise = effective_noise(config);
  const DiagonalPhaseOp rt = target_rotation(config, targets, noise);
  const StateVector initial = prepare(u);
  const double alpha = target_projection(initial, targets);
  const auto& spec = config.hamiltonian;

  SearchHamiltonian h = build_hamiltonian(spec.kind, u, targets, spec.s, &rt);
  if (spec.scale != 1.0) h = h.scaled(spec.scale);
  const double t_max = spec.t_max ? *spec.t_max : 2.0 * std::numbers::pi / alpha;
  ScanResult scan =
      scan_target_probability(h, initial, ProbeSubspace::of_targets(targets), t_max, spec.samples);

  ScenarioResult r;
  add_common(r.summary, config, targets, alpha);
  r.summary.add("peak_time", scan.peak.time);
  r.summary.add("peak_probability", scan.peak.probability);
  if (h.kind() == HamiltonianKind::fg) {
    r.summary.add("peak_time_predicted", std::numbers::pi / (2.0 * alpha * spec.scale));
  }
  if (h.kind() == HamiltonianKind::new_search) {
    const SubspaceFrame frame = compute_subspace_frame(initial, rt);
    const StateVector at_peak = evolve(h, initial, scan.peak.time);
    r.summary.add("leakage_at_peak", leakage_from_span(at_peak, frame.initial, frame.sigma));
    r.summary.add("tau_probability_at_peak", fidelity(frame.tau, at_peak));
  }
  r.scan = std::move(scan);
  return r;
}

ScenarioResult run_nondiagonal(const ExperimentConfig& config) {
  const UnitaryFamily u = make_unitary(config);
  const TargetSet targets = make_targets(config);
  const NoiseSpec noise = effective_noise(config);
  const std::size_t n = config.dim();
  const std::uint64_t base_seed =
      config.unitary.seed != 0 ? config.unitary.seed : config.seed.value_or(0);
  auto basis = [&](double angle, std::uint64_t seed) {
    return angle == 0.0 ? UnitaryFamily::identity(n)
                        : UnitaryFamily::dense(near_identity_unitary(n, angle, seed));
  };
  const UnitaryFamily e_p = basis(config.nondiagonal.ep_angle, base_seed);
  const UnitaryFamily e_q = basis(config.nondiagonal.eq_angle, base_seed + 1);

  const std::size_t zero[] = {0};
  const bool iterative = config.mode == EngineMode::iterative;
  const DiagonalPhaseOp s0 =
      iterative ? zero_rotation(config, noise)
                : sample_perturbed_inversion(n, zero, noise, SelectiveKind::zero);
  const DiagonalPhaseOp st =
      iterative ? target_rotation(config, targets, noise)
                : sample_perturbed_inversion(n, targets.indices(), noise, SelectiveKind::target);

  NonDiagonalRun run =
      run_nondiagonal_scenario(e_p, e_q, s0, st, u, targets, config.mode, config.varphi, config.levels);

  ScenarioResult r;
  add_common(r.summary, config, targets, target_projection(prepare(u), targets));
  r.summary.add("mode", to_string(config.mode));
  r.summary.add("selectivity_p", run.selectivity_p);
  r.summary.add("selectivity_q", run.selectivity_q);
  r.summary.add("v_form_deviation", run.v_form_deviation);
  r.summary.add_count("iterations", run.iterations);
  add_outcome(r.summary, run.trajectory);
  r.warnings = std::move(run.warnings);
  r.trajectory = std::move(run.trajectory);
  return r;
}

ScenarioResult run_workspace(const ExperimentConfig& config) {
  const UnitaryFamily u = make_unitary(config);
  const TargetSet targets = make_targets(config);
  WorkspaceSpec ws;
  ws.search_qubits = config.n_qubits;
  ws.ancilla_qubits = config.workspace.ancilla_qubits;
  ws.a_op = make_workspace_op(config.workspace.a_op, ws.ancilla_qubits);
  ws.b_op = make_workspace_op(config.workspace.b_op, ws.ancilla_qubits);

  WorkspaceRun run =
      run_workspace_scenario(ws, u, targets, config.varphi, config.mode, config.levels);

  ScenarioResult r;
  add_common(r.summary, config, targets, target_projection(prepare(u), targets));
  r.summary.add("mode", to_string(config.mode));
  r.summary.add("joint_delta_t", run.delta_t);
  r.summary.add_count("iterations", run.iterations);
  for (std::size_t l = 0; l < run.kappa.size(); ++l) {
    r.summary.add("kappa_" + std::to_string(l + 1), run.kappa[l]);
    r.summary.add("kappa_bound_" + std::to_string(l + 1), run.kappa_bounds[l]);
  }
  add_outcome(r.summary, run.trajectory);
  r.summary.add("marginal_success", run.marginal_success);
  r.trajectory = std::move(run.trajectory);
  return r;
}

// Amplification of individual targets under mismatched per-target phases.
ScenarioResult run_per_target(const ExperimentConfig& config) {
  const UnitaryFamily u = make_unitary(config);
  const TargetSet targets = make_targets(config);
  const NoiseSpec noise = effective_noise(config);
  const DiagonalPhaseOp st = target_rotation(config, targets, noise);
  const DiagonalPhaseOp s0 = zero_rotation(config, noise);
  const StateVector initial = prepare(u);
  const double alpha = target_projection(initial, targets);
  const std::size_t n = config.iterations ? *config.iterations : grover_iterations(alpha);

  const AmplitudeAmplifier g(u, s0, st);
  StateVector state = initial;
  std::vector<double> best(targets.count(), 0.0);
  ScenarioResult r;
  r.trajectory.record(0, 0, alpha);
  for (std::size_t k = 1; k <= n; ++k) {
    g.step(state);
    r.trajectory.record(k, k, target_projection(state, targets));
    for (std::size_t i = 0; i < targets.count(); ++i) {
      const std::size_t j = targets.indices()[i];
      if (std::abs(initial[j]) > 0.0) best[i] = std::max(best[i], std::abs(state[j] / initial[j]));
    }
  }
  add_common(r.summary, config, targets, alpha);
  r.summary.add_count("iterations", n);
  for (std::size_t i = 0; i < targets.count(); ++i) {
    const std::size_t j = targets.indices()[i];
    const std::string tag = std::to_string(j);
    r.summary.add("u_abs_" + tag, std::abs(initial[j]));
    r.summary.add("phase_gap_" + tag,
                  std::abs(wrap_angle(st.phase(j) - config.varphi)));
    r.summary.add("max_gain_" + tag, best[i]);
  }
  add_outcome(r.summary, r.trajectory);
  return r;
}

}  // namespace

ScenarioResult run_scenario(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  ScenarioResult result;
  switch (config.scenario) {
    case Scenario::grover_baseline: result = run_amplification(config, false); break;
    case Scenario::phase_mismatch: result = run_amplification(config, true); break;
    case Scenario::iterative: result = run_iterative_scenario(config); break;
    case Scenario::recursive: result = run_recursive_scenario(config); break;
    case Scenario::hamiltonian: result = run_hamiltonian_scenario(config); break;
    case Scenario::nondiagonal: result = run_nondiagonal(config); break;
    case Scenario::workspace: result = run_workspace(config); break;
    case Scenario::per_target_matching:
      if (!options.exploratory) {
        throw ConfigError("scenario", "per_target_matching is exploratory; pass --exploratory");
      }
      result = run_per_target(config);
      break;
  }
  if (!config.output_path.empty()) write_text_file(config.output_path, result.csv());
  return result;
}

}  // namespace qsearch
