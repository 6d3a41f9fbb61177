#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "qsearch/errors.hpp"
#include "qsearch/iterative_search.hpp"
#include "qsearch/nondiagonal.hpp"
#include "qsearch/scenario.hpp"

using namespace qsearch;
using std::numbers::pi;

namespace {

ExperimentConfig base(Scenario s, unsigned n_qubits = 8) {
  ExperimentConfig c;
  c.scenario = s;
  c.n_qubits = n_qubits;
  c.seed = 11;
  c.targets.indices = {5};
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Config, TextRoundTrip) {
  ExperimentConfig c = base(Scenario::recursive, 12);
  c.output_path = "out.csv";
  c.targets.indices = {1, 70, 300};
  c.unitary.kind = "qubit_product";
  c.unitary.ry_angles = std::vector<double>(12, 0.1);
  c.unitary.wht_first = true;
  c.noise = {0.2, 0.1, NoiseLaw::uniform, 42, {}, {}};
  c.phi = 1.0 / 3.0;
  c.varphi = pi / 2;
  c.phi_list = {0.1, 0.2, 0.30000000000000004};
  c.iterations = 17;
  c.levels = 5;
  c.hamiltonian.kind = HamiltonianKind::new_search;
  c.hamiltonian.t_max = 12.5;
  c.workspace.a_op = "phase:1.5";
  c.nondiagonal.ep_angle = 0.1;
  c.sweep.parameter = "noise.delta_t";
  c.sweep.values = {"0.1", "0.2"};
  const auto text = c.to_text();
  const auto back = ExperimentConfig::parse(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.to_text(), text);
}

TEST(Config, DefaultRoundTrip) {
  const ExperimentConfig c;
  EXPECT_EQ(ExperimentConfig::parse(c.to_text()), c);
}

TEST(Config, PiExpressions) {
  ExperimentConfig c;
  c.set("search.phi", "pi/2");
  EXPECT_DOUBLE_EQ(c.phi, pi / 2);
  c.set("search.varphi", "-pi");
  EXPECT_DOUBLE_EQ(c.varphi, -pi);
  c.set("search.varphi", "0.5*pi/3");
  EXPECT_DOUBLE_EQ(c.varphi, 0.5 * pi / 3);
}

TEST(Config, ErrorsNameTheField) {
  ExperimentConfig c;
  try {
    c.set("noise.delta_t", "abc");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "noise.delta_t");
  }
  EXPECT_THROW(c.set("bogus.key", "1"), ConfigError);
  EXPECT_THROW(c.set("scenario", "warp"), ConfigError);
  EXPECT_THROW(ExperimentConfig::parse("[experiment]\nn_qubits\n"), ConfigError);
}

TEST(Config, RejectsLargeDeltas) {
  auto c = base(Scenario::recursive);
  c.noise.delta_t = pi / 2;
  try {
    c.validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "noise.delta_t");
    EXPECT_NE(std::string(e.what()).find("small perturbations"), std::string::npos);
  }
  c.noise.delta_t = 0.1;
  c.noise.delta_0 = 2.0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Config, ValidationCases) {
  auto c = base(Scenario::iterative);
  c.seed.reset();
  EXPECT_THROW(c.validate(), ConfigError);
  c = base(Scenario::iterative);
  c.varphi = 0.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = base(Scenario::grover_baseline);
  c.targets.indices = {256};
  EXPECT_THROW(c.validate(), ConfigError);
  c = base(Scenario::hamiltonian, 13);
  EXPECT_THROW(c.validate(), CapabilityError);
  c = base(Scenario::workspace, 8);
  c.workspace.ancilla_qubits = 5;
  EXPECT_THROW(c.validate(), CapabilityError);
  c = base(Scenario::workspace, 8);
  c.workspace.a_op = "spin";
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Csv, Format) {
  RunTrajectory t;
  EXPECT_EQ(format_trajectory_csv(t), std::string(kTrajectoryHeader) + "\n");
  t.record(0, 0, 0.5);
  t.record(1, 2, 1.0 / 3.0, 0.25, 0.125);
  t.record(2, 4, 0.75);
  const auto csv = format_trajectory_csv(t);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("1,2,0.333333333333,0.111111111111,0.25,0.125\n"), std::string::npos);
  EXPECT_NE(csv.find("0,0,0.5,0.25,,\n"), std::string::npos);
  const auto prefixed = format_trajectory_csv(t, {{"noise.delta_t", "0.1"}});
  EXPECT_EQ(prefixed.rfind("noise.delta_t,step,", 0), 0u);
}

TEST(Csv, WriteFailureNamesPath) {
  try {
    emit_csv(RunTrajectory{}, "/nonexistent-dir/x.csv");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.csv"), std::string::npos);
  }
}

TEST(Scenario, GroverSummary) {
  auto c = base(Scenario::grover_baseline, 10);
  const auto r = run_scenario(c);
  EXPECT_EQ(r.summary.number("iterations"), 25.0);
  EXPECT_GE(r.summary.number("success_final"), 0.999);
  EXPECT_NEAR(r.summary.number("success_final"), r.summary.number("success_closed_form_exact_phases"),
              1e-9);
}

TEST(Scenario, RecursionMatchesAmplification) {
  auto rec = base(Scenario::recursive);
  rec.levels = 4;
  auto aa = base(Scenario::grover_baseline);
  aa.iterations = 40;
  const auto a = run_scenario(rec);
  const auto b = run_scenario(aa);
  EXPECT_NEAR(a.trajectory.back().alpha, b.trajectory.back().alpha, 1e-10);
  EXPECT_EQ(a.summary.number("queries_measured_4"), a.summary.number("queries_predicted_4"));
}

TEST(Scenario, MismatchVersusIterative) {
  auto m = base(Scenario::phase_mismatch, 10);
  m.varphi = pi / 2;
  m.phi = pi / 2;
  auto it = m;
  it.scenario = Scenario::iterative;
  m.phi = pi;
  EXPECT_LE(run_scenario(m).summary.number("success_max"), 0.05);
  EXPECT_GE(run_scenario(it).summary.number("success_final"), 0.99);
}

TEST(Scenario, PredictedAlongsideMeasured) {
  auto it = base(Scenario::iterative, 10);
  it.phi = it.varphi = pi / 2;
  const auto r = run_scenario(it);
  EXPECT_TRUE(r.summary.find("queries_predicted"));
  EXPECT_TRUE(r.summary.find("queries"));
  auto rec = base(Scenario::recursive, 10);
  rec.noise.delta_t = 0.1;
  const auto s = run_scenario(rec);
  EXPECT_TRUE(s.summary.find("kappa_1"));
  EXPECT_TRUE(s.summary.find("kappa_bound_1"));
  EXPECT_GE(s.summary.number("kappa_1"), s.summary.number("kappa_bound_1"));
}

TEST(Scenario, ExploratoryGate) {
  auto c = base(Scenario::per_target_matching, 10);
  c.targets.indices = {3, 9};
  c.phi_list = {pi, pi / 2};
  EXPECT_THROW(run_scenario(c), ConfigError);
  const auto r = run_scenario(c, RunOptions{true});
  EXPECT_TRUE(r.summary.find("max_gain_3"));
  EXPECT_GT(r.summary.number("max_gain_3"), r.summary.number("max_gain_9"));
}

TEST(Scenario, HamiltonianWritesScan) {
  auto c = base(Scenario::hamiltonian, 6);
  c.hamiltonian.samples = 11;
  c.output_path = testing::TempDir() + "/ham.csv";
  const auto r = run_scenario(c);
  ASSERT_TRUE(r.scan);
  const auto text = slurp(c.output_path);
  EXPECT_EQ(text.rfind("time,probability\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
}

TEST(Scenario, Deterministic) {
  for (Scenario s : {Scenario::grover_baseline, Scenario::phase_mismatch, Scenario::iterative,
                     Scenario::recursive, Scenario::hamiltonian, Scenario::nondiagonal,
                     Scenario::workspace}) {
    auto c = base(s, 6);
    c.targets.indices.clear();
    c.targets.count = 2;
    c.noise.delta_t = 0.1;
    c.noise.delta_0 = 0.05;
    c.nondiagonal.ep_angle = 0.05;
    c.hamiltonian.samples = 101;
    EXPECT_EQ(run_scenario(c).csv(), run_scenario(c).csv()) << to_string(s);
  }
}

TEST(Workspace, TrivialEmbeddingMatchesPlainRun) {
  auto w = base(Scenario::workspace);
  auto plain = base(Scenario::iterative);
  const auto a = run_scenario(w);
  const auto b = run_scenario(plain);
  EXPECT_NEAR(a.summary.number("marginal_success"), b.summary.number("success_final"), 1e-10);
}

TEST(Workspace, IterativeNeedsCleanB) {
  WorkspaceSpec ws;
  ws.search_qubits = 4;
  ws.ancilla_qubits = 1;
  ws.a_op = -DenseMatrix::Identity(2, 2);
  ws.b_op = make_workspace_op("rotation:0.1", 1);
  const TargetSet t(16, {3});
  EXPECT_THROW(run_workspace_scenario(ws, UnitaryFamily::walsh_hadamard(16), t, pi,
                                      EngineMode::iterative),
               ConfigError);
  const auto run = run_workspace_scenario(ws, UnitaryFamily::walsh_hadamard(16), t, pi,
                                          EngineMode::recursive, 1);
  EXPECT_EQ(run.kappa.size(), 1u);
}

TEST(Workspace, OracleLayoutAndDelta) {
  WorkspaceSpec ws;
  ws.search_qubits = 2;
  ws.ancilla_qubits = 1;
  ws.a_op = make_workspace_op("neg_rotation:0.1", 1);
  ws.b_op = make_workspace_op("identity", 1);
  EXPECT_NEAR(workspace_oracle_delta(ws), 0.1, 1e-12);
  const WorkspaceOracle q(ws, TargetSet(4, {2}));
  // |j=2>|a=0> -> -(cos|0> + sin|1>) on the ancilla.
  StateVector s = StateVector::basis(8, 2);
  apply(q, s);
  EXPECT_NEAR(s[2].real(), -std::cos(0.1), 1e-15);
  EXPECT_NEAR(s[6].real(), -std::sin(0.1), 1e-15);
  StateVector r = StateVector::basis(8, 1);
  apply(q, r);
  EXPECT_EQ(r[1], Complex(1.0));
}

TEST(Workspace, PhaseOracleReachesTarget) {
  auto w = base(Scenario::workspace);
  w.workspace.a_op = "phase:" + format_double(pi / 2);
  EXPECT_GE(run_scenario(w).summary.number("marginal_success"), 0.95);
}

TEST(NonDiagonal, IdentityBasesMatchDiagonal) {
  const std::size_t n = 256;
  const auto u = UnitaryFamily::walsh_hadamard(n);
  const TargetSet t(n, {5});
  const std::size_t z[] = {0};
  const auto s0 = build_selective_rotation(n, z, pi / 2);
  const auto st = build_selective_rotation(n, t.indices(), pi / 2);
  const auto id = UnitaryFamily::identity(n);
  const auto nd = run_nondiagonal_scenario(id, id, s0, st, u, t, EngineMode::iterative, pi / 2);
  const auto plain = run_iterative(u, st, pi / 2, t);
  ASSERT_EQ(nd.trajectory.size(), plain.trajectory.size());
  for (std::size_t k = 0; k < nd.trajectory.size(); ++k) {
    EXPECT_NEAR(nd.trajectory.steps[k].alpha, plain.trajectory.steps[k].alpha, 1e-12);
  }
  EXPECT_TRUE(nd.warnings.empty());
}

TEST(NonDiagonal, VFormEquivalence) {
  const std::size_t n = 128;
  const auto u = UnitaryFamily::walsh_hadamard(n);
  const TargetSet t(n, {5});
  const auto ep = UnitaryFamily::dense(near_identity_unitary(n, 0.1, 1));
  const auto eq = UnitaryFamily::dense(near_identity_unitary(n, 0.1, 2));
  const NoiseSpec noise{0.1, 0.1, NoiseLaw::uniform, 3, {}, {}};
  const std::size_t z[] = {0};
  const auto s0 = sample_perturbed_inversion(n, z, noise, SelectiveKind::zero);
  const auto st = sample_perturbed_inversion(n, t.indices(), noise, SelectiveKind::target);
  const auto it = run_nondiagonal_scenario(ep, eq, build_selective_rotation(n, z, pi),
                                           build_selective_inversion(n, t.indices()), u, t,
                                           EngineMode::iterative, pi);
  EXPECT_LE(it.v_form_deviation, 1e-9);
  EXPECT_GE(it.trajectory.max_success(), 0.95);
  const auto rec = run_nondiagonal_scenario(ep, eq, s0, st, u, t, EngineMode::recursive, pi, 3);
  EXPECT_LE(rec.v_form_deviation, 1e-9);
}

TEST(NonDiagonal, WarnsOnNonSelectiveBasis) {
  const std::size_t n = 16;
  const auto u = UnitaryFamily::walsh_hadamard(n);
  const TargetSet t(n, {5});
  const std::size_t z[] = {0};
  const auto h = UnitaryFamily::dense(hadamard_matrix(n));
  const auto run = run_nondiagonal_scenario(h, UnitaryFamily::identity(n),
                                            build_selective_inversion(n, z),
                                            build_selective_inversion(n, t.indices()), u, t,
                                            EngineMode::recursive, pi, 1);
  EXPECT_EQ(run.warnings.size(), 1u);
}

TEST(Sweep, OrderedAndWorkerIndependent) {
  auto c = base(Scenario::recursive, 8);
  c.sweep.parameter = "noise.delta_t";
  c.sweep.values = {"0", "0.1", "0.2", "0.3"};
  const auto one = run_sweep(c, {}, 1);
  const auto four = run_sweep(c, {}, 4);
  EXPECT_EQ(one.csv, four.csv);
  EXPECT_EQ(one.csv.rfind("noise.delta_t,step,", 0), 0u);
  const auto pos1 = one.csv.find("\n0.1,");
  const auto pos3 = one.csv.find("\n0.3,");
  EXPECT_LT(pos1, pos3);
  EXPECT_EQ(one.points.size(), 4u);
}

TEST(Sweep, BadValueFailsUpFront) {
  auto c = base(Scenario::recursive, 8);
  c.sweep.parameter = "noise.delta_t";
  c.sweep.values = {"0.1", "3"};
  EXPECT_THROW(run_sweep(c), ConfigError);
}
