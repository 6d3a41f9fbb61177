#include "qsearch/trajectory.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsearch {

void RunTrajectory::record(std::size_t step, std::uint64_t queries, double alpha,
                           std::optional<double> angle_to_sigma,
                           std::optional<double> overlap_tau) {
  if (!steps.empty() && queries < steps.back().oracle_queries) {
    throw std::logic_error("RunTrajectory: oracle query count decreased");
  }
  steps.push_back({step, queries, alpha, alpha * alpha, angle_to_sigma, overlap_tau});
}

double RunTrajectory::max_success() const noexcept {
  double best = 0.0;
  for (const auto& s : steps) best = std::max(best, s.success_prob);
  return best;
}

double RunTrajectory::final_success() const noexcept {
  return steps.empty() ? 0.0 : steps.back().success_prob;
}

}  // namespace qsearch
