#include "qsearch/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qsearch {

namespace {

std::string field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string header_with(const char* header, const SweepColumns& prefix) {
  std::string out;
  for (const auto& [name, value] : prefix) out += field(name) + ',';
  out += header;
  out += '\n';
  return out;
}

std::string row_prefix(const SweepColumns& prefix) {
  std::string out;
  for (const auto& [name, value] : prefix) out += field(value) + ',';
  return out;
}

}  // namespace

std::string format_csv_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_trajectory_csv(const RunTrajectory& traj, const SweepColumns& prefix,
                                  bool include_header) {
  std::string out = include_header ? header_with(kTrajectoryHeader, prefix) : std::string();
  const std::string lead = row_prefix(prefix);
  for (const auto& s : traj.steps) {
    out += lead;
    out += std::to_string(s.step) + ',' + std::to_string(s.oracle_queries) + ',' +
           format_csv_number(s.alpha) + ',' + format_csv_number(s.success_prob) + ',';
    if (s.angle_to_sigma) out += format_csv_number(*s.angle_to_sigma);
    out += ',';
    if (s.overlap_tau) out += format_csv_number(*s.overlap_tau);
    out += '\n';
  }
  return out;
}

std::string format_scan_csv(const ScanResult& scan, const SweepColumns& prefix,
                            bool include_header) {
  std::string out = include_header ? header_with(kScanHeader, prefix) : std::string();
  const std::string lead = row_prefix(prefix);
  for (const auto& p : scan.samples) {
    out += lead + format_csv_number(p.time) + ',' + format_csv_number(p.probability) + '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void emit_csv(const RunTrajectory& traj, const std::string& path) {
  write_text_file(path, format_trajectory_csv(traj));
}

void emit_scan_csv(const ScanResult& scan, const std::string& path) {
  write_text_file(path, format_scan_csv(scan));
}

}  // namespace qsearch
