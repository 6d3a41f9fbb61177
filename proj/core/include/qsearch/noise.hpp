#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/phase_ops.hpp"
#include "qsearch/state_vector.hpp"

namespace qsearch {

enum class NoiseLaw {
  uniform,         // eps_j ~ U[-delta, delta), independent per index
  fixed_offset,    // eps_j = +delta on every index
  per_index_list,  // eps_j taken from an explicit list of length N
};

const char* to_string(NoiseLaw law) noexcept;
NoiseLaw parse_noise_law(std::string_view text);

/// Systematic phase errors of S_t and S_0, as angle bounds.
///
/// delta_t bounds |eps_j| for S_t, delta_0 bounds |mu_j| for S_0. Phase
/// arrays are a pure function of the spec: equal specs give bit-identical
/// operators.
struct NoiseSpec {
  double delta_t = 0.0;
  double delta_0 = 0.0;
  NoiseLaw law = NoiseLaw::uniform;
  std::uint64_t seed = 0;
  std::vector<double> offsets_t;  // per_index_list only
  std::vector<double> offsets_0;  // per_index_list only

  /// Plain key=value lines: delta_t, delta_0, law, seed (and the offset
  /// lists when law = per_index_list). Doubles use 17 significant digits.
  std::string to_text() const;
  static NoiseSpec parse(std::string_view text);

  bool operator==(const NoiseSpec&) const = default;
};

enum class SelectiveKind { target, zero };

/// The perturbation eps_j (or mu_j) for one index, without building the op.
double sample_offset(const NoiseSpec& noise, SelectiveKind which, std::size_t index);

/// phi_j = pi [j in marked] + eps_j with |eps_j| <= delta. `marked` is the
/// target set for S_t and {0} for S_0.
DiagonalPhaseOp sample_perturbed_inversion(std::size_t dim,
                                           std::span<const std::size_t> marked,
                                           const NoiseSpec& noise,
                                           SelectiveKind which);

}  // namespace qsearch
