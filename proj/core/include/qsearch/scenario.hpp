#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsearch/config.hpp"
#include "qsearch/csv.hpp"
#include "qsearch/hamiltonian.hpp"
#include "qsearch/trajectory.hpp"

namespace qsearch {

/// Ordered key = value record. Predicted quantities are always reported
/// next to their measured counterparts.
class ScenarioSummary {
 public:
  void add(std::string key, double value);
  void add(std::string key, std::string value);
  void add_count(std::string key, std::uint64_t value);

  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept {
    return entries_;
  }
  std::optional<std::string> find(const std::string& key) const;
  double number(const std::string& key) const;

  std::string to_text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct ScenarioResult {
  RunTrajectory trajectory;
  std::optional<ScanResult> scan;  // hamiltonian scenario
  ScenarioSummary summary;
  std::vector<std::string> warnings;

  /// CSV text of whichever output this scenario produces.
  std::string csv(const SweepColumns& prefix = {}, bool include_header = true) const;
};

struct RunOptions {
  bool exploratory = false;
};

/// Dispatches on config.scenario. Deterministic in the config (and seed).
/// Writes the CSV when config.output_path is set.
ScenarioResult run_scenario(const ExperimentConfig& config, const RunOptions& options = {});

/// Runs the config's sweep block: one scenario run per value, executed on a
/// worker pool, written to one CSV in sweep order.
struct SweepResult {
  std::vector<ScenarioResult> points;
  std::string csv;
};

SweepResult run_sweep(const ExperimentConfig& config, const RunOptions& options = {},
                      unsigned workers = 0);

}  // namespace qsearch
