#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qsearch {

struct TrajectoryStep {
  std::size_t step = 0;
  std::uint64_t oracle_queries = 0;
  double alpha = 0.0;
  double success_prob = 0.0;
  std::optional<double> angle_to_sigma;
  std::optional<double> overlap_tau;
};

/// Per-step record of a search run. oracle_queries never decreases and
/// success_prob is alpha^2.
struct RunTrajectory {
  std::vector<TrajectoryStep> steps;
  /// Set when a recursion budget stopped the run early.
  bool truncated = false;

  void record(std::size_t step, std::uint64_t queries, double alpha,
              std::optional<double> angle_to_sigma = std::nullopt,
              std::optional<double> overlap_tau = std::nullopt);

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }
  const TrajectoryStep& back() const { return steps.back(); }

  double max_success() const noexcept;
  double final_success() const noexcept;
};

}  // namespace qsearch
