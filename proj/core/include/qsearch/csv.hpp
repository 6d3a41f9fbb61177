#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsearch/hamiltonian.hpp"
#include "qsearch/trajectory.hpp"

namespace qsearch {

inline constexpr const char* kTrajectoryHeader =
    "step,queries,alpha,success_prob,angle_to_sigma,overlap_tau";
inline constexpr const char* kScanHeader = "time,probability";

/// Leading columns for sweep output: (name, value) pairs written before
/// every row, with the header prefixed accordingly.
using SweepColumns = std::vector<std::pair<std::string, std::string>>;

/// Decimal with 12 significant digits.
std::string format_csv_number(double value);

std::string format_trajectory_csv(const RunTrajectory& traj, const SweepColumns& prefix = {},
                                  bool include_header = true);
std::string format_scan_csv(const ScanResult& scan, const SweepColumns& prefix = {},
                            bool include_header = true);

/// Writes the trajectory CSV to `path`; throws std::runtime_error naming the
/// path on I/O failure.
void emit_csv(const RunTrajectory& traj, const std::string& path);
void emit_scan_csv(const ScanResult& scan, const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace qsearch
