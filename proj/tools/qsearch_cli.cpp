// qsearch: run one search experiment (or a sweep) and write its CSV.
//
//   qsearch iterative --seed 7 --n-qubits 10 --phi pi/2 --varphi pi/2 --out run.csv
//   qsearch sweep --config sweep.cfg --seed 1
//
// exit codes: 0 ok, 2 config error, 3 capability error, 1 anything else

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/scenario.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<unsigned> n_qubits;
  std::string targets;
  std::string phi, varphi, delta_t, delta_0, mode;
  std::optional<unsigned> levels;
  std::optional<std::size_t> iterations;
  std::vector<std::string> overrides;
  bool exploratory = false;
  unsigned workers = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "Config file (key = value lines with [section] headers)");
  cmd->add_option("--seed", f.seed, "Experiment seed")->required();
  cmd->add_option("--out", f.out, "CSV output path (stdout when omitted)");
  cmd->add_option("--n-qubits", f.n_qubits, "Search register qubits");
  cmd->add_option("--targets", f.targets, "Target indices i,j,... or random:M");
  cmd->add_option("--phi", f.phi, "Target rotation angle (accepts pi/2 etc.)");
  cmd->add_option("--varphi", f.varphi, "|0> rotation angle");
  cmd->add_option("--delta-t", f.delta_t, "Target phase error bound");
  cmd->add_option("--delta-0", f.delta_0, "|0> phase error bound");
  cmd->add_option("--levels", f.levels, "Recursion depth m");
  cmd->add_option("--iterations", f.iterations, "Fixed iteration count");
  cmd->add_option("--mode", f.mode, "iterative or recursive (workspace, nondiagonal)");
  cmd->add_option("--set", f.overrides, "Any config key: section.key=value")->take_all();
  cmd->add_flag("--exploratory", f.exploratory, "Allow exploratory scenarios");
}

qsearch::ExperimentConfig build_config(const Flags& f, std::optional<qsearch::Scenario> scenario) {
  qsearch::ExperimentConfig c;
  if (!f.config_path.empty()) c = qsearch::ExperimentConfig::load(f.config_path);
  if (scenario) c.scenario = *scenario;
  c.seed = f.seed;
  if (!f.out.empty()) c.output_path = f.out;
  if (f.n_qubits) c.set("n_qubits", std::to_string(*f.n_qubits));
  if (!f.targets.empty()) {
    if (f.targets.rfind("random:", 0) == 0) {
      c.targets.indices.clear();
      c.set("targets.count", f.targets.substr(7));
    } else {
      c.set("targets.indices", f.targets);
    }
  }
  if (!f.phi.empty()) c.set("search.phi", f.phi);
  if (!f.varphi.empty()) c.set("search.varphi", f.varphi);
  if (!f.delta_t.empty()) c.set("noise.delta_t", f.delta_t);
  if (!f.delta_0.empty()) c.set("noise.delta_0", f.delta_0);
  if (f.levels) c.set("search.levels", std::to_string(*f.levels));
  if (f.iterations) c.set("search.iterations", std::to_string(*f.iterations));
  if (!f.mode.empty()) c.set("search.mode", f.mode);
  for (const auto& kv : f.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw qsearch::ConfigError(kv, "expected key=value");
    c.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return c;
}

void report(const qsearch::ScenarioResult& r, bool with_csv) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << r.summary.to_text();
  if (with_csv) std::cout << '\n' << r.csv();
}

}  // namespace

int main(int argc, char** argv) {
  using qsearch::Scenario;
  CLI::App app{"Robust quantum search simulator"};
  app.require_subcommand(1);
  Flags f;

  const std::pair<const char*, Scenario> commands[] = {
      {"grover", Scenario::grover_baseline},   {"mismatch", Scenario::phase_mismatch},
      {"iterative", Scenario::iterative},      {"recursive", Scenario::recursive},
      {"hamiltonian", Scenario::hamiltonian},  {"nondiagonal", Scenario::nondiagonal},
      {"workspace", Scenario::workspace},
  };
  std::vector<std::pair<CLI::App*, Scenario>> runners;
  for (const auto& [name, scenario] : commands) {
    auto* cmd = app.add_subcommand(name, std::string("Run the ") + qsearch::to_string(scenario) +
                                             " scenario");
    add_common(cmd, f);
    runners.emplace_back(cmd, scenario);
  }
  auto* sweep = app.add_subcommand("sweep", "Run the config's sweep block");
  add_common(sweep, f);
  sweep->add_option("--workers", f.workers, "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    qsearch::RunOptions options{f.exploratory};
    if (*sweep) {
      const auto config = build_config(f, std::nullopt);
      const auto result = qsearch::run_sweep(config, options, f.workers);
      for (std::size_t k = 0; k < result.points.size(); ++k) {
        std::cout << "[" << config.sweep.parameter << " = " << config.sweep.values[k] << "]\n";
        report(result.points[k], false);
      }
      if (config.output_path.empty()) std::cout << '\n' << result.csv;
      return 0;
    }
    for (const auto& [cmd, scenario] : runners) {
      if (!*cmd) continue;
      Scenario chosen = scenario;
      if (scenario == Scenario::phase_mismatch && f.exploratory) {
        chosen = Scenario::per_target_matching;
      }
      const auto config = build_config(f, chosen);
      report(qsearch::run_scenario(config, options), config.output_path.empty());
    }
    return 0;
  } catch (const qsearch::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const qsearch::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
