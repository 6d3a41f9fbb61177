#include "qsearch/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qsearch/config.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

const char* to_string(NoiseLaw law) noexcept {
  switch (law) {
    case NoiseLaw::uniform: return "uniform";
    case NoiseLaw::fixed_offset: return "fixed_offset";
    case NoiseLaw::per_index_list: return "per_index_list";
  }
  return "?";
}

NoiseLaw parse_noise_law(std::string_view text) {
  if (text == "uniform") return NoiseLaw::uniform;
  if (text == "fixed_offset") return NoiseLaw::fixed_offset;
  if (text == "per_index_list") return NoiseLaw::per_index_list;
  throw ConfigError("noise.law", "unknown law '" + std::string(text) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const std::string text(value);
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string(key), "not a number: '" + std::string(value) + "'");
  }
}

std::vector<double> parse_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    out.push_back(parse_number(key, trim(value.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += format_double(values[k]);
  }
  return out;
}

}  // namespace

std::string NoiseSpec::to_text() const {
  std::ostringstream os;
  os << "delta_t = " << format_double(delta_t) << '\n'
     << "delta_0 = " << format_double(delta_0) << '\n'
     << "law = " << to_string(law) << '\n'
     << "seed = " << seed << '\n';
  if (law == NoiseLaw::per_index_list) {
    os << "offsets_t = " << join(offsets_t) << '\n' << "offsets_0 = " << join(offsets_0) << '\n';
  }
  return os.str();
}

NoiseSpec NoiseSpec::parse(std::string_view text) {
  NoiseSpec spec;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("noise", "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "delta_t") {
      spec.delta_t = parse_number("noise.delta_t", value);
    } else if (key == "delta_0") {
      spec.delta_0 = parse_number("noise.delta_0", value);
    } else if (key == "law") {
      spec.law = parse_noise_law(value);
    } else if (key == "seed") {
      try {
        spec.seed = std::stoull(std::string(value));
      } catch (const std::exception&) {
        throw ConfigError("noise.seed", "not an unsigned integer");
      }
    } else if (key == "offsets_t") {
      spec.offsets_t = parse_list("noise.offsets_t", value);
    } else if (key == "offsets_0") {
      spec.offsets_0 = parse_list("noise.offsets_0", value);
    } else {
      throw ConfigError("noise." + std::string(key), "unknown key");
    }
  }
  return spec;
}

double sample_offset(const NoiseSpec& noise, SelectiveKind which, std::size_t index) {
  const bool target = which == SelectiveKind::target;
  const double delta = target ? noise.delta_t : noise.delta_0;
  switch (noise.law) {
    case NoiseLaw::uniform:
      if (delta == 0.0) return 0.0;
      return delta * CounterRng(noise.seed, target ? 0 : 1).symmetric(index);
    case NoiseLaw::fixed_offset:
      return delta;
    case NoiseLaw::per_index_list: {
      const auto& list = target ? noise.offsets_t : noise.offsets_0;
      if (index >= list.size()) {
        throw std::invalid_argument("sample_offset: per-index list shorter than the dimension");
      }
      return list[index];
    }
  }
  return 0.0;
}

DiagonalPhaseOp sample_perturbed_inversion(std::size_t dim, std::span<const std::size_t> marked,
                                           const NoiseSpec& noise, SelectiveKind which) {
  const double delta = which == SelectiveKind::target ? noise.delta_t : noise.delta_0;
  if (!(delta >= 0.0) || delta >= std::numbers::pi) {
    throw std::invalid_argument("sample_perturbed_inversion: need 0 <= delta < pi");
  }
  std::vector<double> phases(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const double eps = sample_offset(noise, which, j);
    if (std::abs(eps) > delta) {
      throw std::invalid_argument("sample_perturbed_inversion: listed offset exceeds delta");
    }
    phases[j] = eps;
  }
  for (std::size_t j : marked) {
    if (j >= dim) throw std::out_of_range("sample_perturbed_inversion: index out of range");
    phases[j] += std::numbers::pi;
  }
  return DiagonalPhaseOp(std::move(phases));
}

}  // namespace qsearch
