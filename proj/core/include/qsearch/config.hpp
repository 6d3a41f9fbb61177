#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/hamiltonian.hpp"
#include "qsearch/noise.hpp"
#include "qsearch/workspace.hpp"

namespace qsearch {

enum class Scenario {
  grover_baseline,
  phase_mismatch,
  iterative,
  recursive,
  hamiltonian,
  nondiagonal,
  workspace,
  per_target_matching,  // exploratory, requires --exploratory
};

const char* to_string(Scenario scenario) noexcept;
Scenario parse_scenario(std::string_view text);

/// Explicit indices win; otherwise `count` indices drawn from `seed`.
struct TargetSpec {
  std::vector<std::size_t> indices;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  bool operator==(const TargetSpec&) const = default;
};

/// walsh_hadamard | qubit_product | dense_hadamard | dense_random.
/// qubit_product applies R_y(ry_angles[k]) to qubit k, preceded by a WHT
/// layer when wht_first is set.
struct UnitarySpec {
  std::string kind = "walsh_hadamard";
  std::vector<double> ry_angles;
  bool wht_first = false;
  std::uint64_t seed = 0;
  bool operator==(const UnitarySpec&) const = default;
};

struct HamiltonianSpec {
  HamiltonianKind kind = HamiltonianKind::fg;
  double s = 0.0;
  std::optional<double> t_max;  // default: 2 pi / alpha_U
  std::size_t samples = 2001;
  double scale = 1.0;
  bool operator==(const HamiltonianSpec&) const = default;
};

/// identity | neg_identity | phase:<a> | rotation:<a> | neg_rotation:<a>
/// rotation acts on ancilla qubit 0 as [[cos a, -sin a], [sin a, cos a]].
struct WorkspaceConfig {
  unsigned ancilla_qubits = 1;
  std::string a_op = "neg_identity";
  std::string b_op = "identity";
  bool operator==(const WorkspaceConfig&) const = default;
};

struct NonDiagonalConfig {
  double ep_angle = 0.0;
  double eq_angle = 0.0;
  bool operator==(const NonDiagonalConfig&) const = default;
};

struct SweepConfig {
  std::string parameter;  // qualified key, e.g. noise.delta_t
  std::vector<std::string> values;
  bool operator==(const SweepConfig&) const = default;
};

/// One experiment. The textual form is flat key = value lines grouped under
/// [section] headers; to_text() and parse() round-trip losslessly.
struct ExperimentConfig {
  Scenario scenario = Scenario::grover_baseline;
  unsigned n_qubits = 10;
  std::optional<std::uint64_t> seed;
  std::string output_path;

  TargetSpec targets;
  UnitarySpec unitary;
  NoiseSpec noise;

  double phi = 3.141592653589793;
  double varphi = 3.141592653589793;
  std::vector<double> phi_list;  // per-target phi_j, overrides phi

  std::optional<std::size_t> iterations;  // default: scenario-specific auto
  unsigned levels = 3;
  double success_c = 0.5;
  std::uint64_t budget = std::uint64_t{1} << 32;
  EngineMode mode = EngineMode::iterative;

  HamiltonianSpec hamiltonian;
  WorkspaceConfig workspace;
  NonDiagonalConfig nondiagonal;
  SweepConfig sweep;

  std::string to_text() const;
  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig load(const std::string& path);

  /// Sets one field from its textual value. `key` is "section.name" (or a
  /// bare name from the [experiment] section). Throws ConfigError.
  void set(std::string_view key, std::string_view value);

  /// Cross-field checks; throws ConfigError naming the field.
  void validate() const;

  std::size_t dim() const noexcept { return std::size_t{1} << n_qubits; }

  bool operator==(const ExperimentConfig&) const = default;
};

/// Builders shared by the scenarios and the CLI.
TargetSet make_targets(const ExperimentConfig& config);
UnitaryFamily make_unitary(const ExperimentConfig& config);
DenseMatrix make_workspace_op(std::string_view spec, unsigned ancilla_qubits);

/// Exact textual form of a double (shortest round-tripping representation).
std::string format_double(double value);

}  // namespace qsearch
