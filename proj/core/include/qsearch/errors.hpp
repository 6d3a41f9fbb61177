#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

/// Dimension mismatch or a dimension that is not a power of two.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested object is too large for the chosen representation
/// (dense matrices above 4096, joint workspace spaces above 2^20, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity the algorithm divides by vanished: trivial oracle, zero
/// rotation angle, degenerate subspace frame.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid experiment configuration. Carries the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace qsearch
