#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qsearch/errors.hpp"
#include "qsearch/scenario.hpp"

namespace qsearch {

SweepResult run_sweep(const ExperimentConfig& config, const RunOptions& options,
                      unsigned workers) {
  const auto& sweep = config.sweep;
  if (sweep.parameter.empty()) throw ConfigError("sweep.parameter", "no sweep parameter set");
  if (sweep.values.empty()) throw ConfigError("sweep.values", "no sweep values given");

  // Every point is configured and validated up front so that a bad value
  // fails before any work starts.
  std::vector<ExperimentConfig> points;
  points.reserve(sweep.values.size());
  for (const auto& value : sweep.values) {
    ExperimentConfig point = config;
    point.sweep = {};
    point.output_path.clear();
    point.set(sweep.parameter, value);
    point.validate();
    points.push_back(std::move(point));
  }

  const std::size_t count = points.size();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::vector<ScenarioResult> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        results[k] = run_scenario(points[k], options);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Single writer, sweep order.
  SweepResult out;
  for (std::size_t k = 0; k < count; ++k) {
    out.csv += results[k].csv({{sweep.parameter, sweep.values[k]}}, k == 0);
  }
  out.points = std::move(results);
  if (!config.output_path.empty()) write_text_file(config.output_path, out.csv);
  return out;
}

}  // namespace qsearch
