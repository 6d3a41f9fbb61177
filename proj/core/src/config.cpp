#include "qsearch/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "qsearch/errors.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

namespace {

constexpr unsigned kMaxQubits = 24;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& field, std::string_view text) {
  const std::string s(trim(text));
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(field, "not a number: '" + s + "'");
  }
}

// Numbers, optionally written as [k*]pi[/d], e.g. "pi/2", "-pi", "0.5*pi".
double parse_real(const std::string& field, std::string_view text) {
  text = trim(text);
  const auto p = text.find("pi");
  if (p == std::string_view::npos) return parse_plain(field, text);
  double factor = 1.0;
  std::string_view head = trim(text.substr(0, p));
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty()) {
    if (head.back() != '*') throw ConfigError(field, "cannot parse '" + std::string(text) + "'");
    head.remove_suffix(1);
    factor = parse_plain(field, head);
  }
  std::string_view tail = trim(text.substr(p + 2));
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw ConfigError(field, "cannot parse '" + std::string(text) + "'");
    divisor = parse_plain(field, tail.substr(1));
  }
  return factor * std::numbers::pi / divisor;
}

std::uint64_t parse_unsigned(const std::string& field, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(field, "not an unsigned integer: '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(const std::string& field, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(field, "expected true or false");
}

template <typename F>
auto parse_list(std::string_view text, char sep, F&& item) {
  std::vector<decltype(item(std::string_view{}))> out;
  text = trim(text);
  while (!text.empty()) {
    const auto k = text.find(sep);
    out.push_back(item(trim(text.substr(0, k))));
    if (k == std::string_view::npos) break;
    text.remove_prefix(k + 1);
  }
  return out;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += format_double(values[k]);
  }
  return out;
}

const char* to_string(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::fg: return "fg";
    case HamiltonianKind::fg_perturbed: return "fg_perturbed";
    case HamiltonianKind::new_search: return "new";
  }
  return "?";
}

HamiltonianKind parse_hamiltonian_kind(std::string_view text) {
  if (text == "fg") return HamiltonianKind::fg;
  if (text == "fg_perturbed") return HamiltonianKind::fg_perturbed;
  if (text == "new") return HamiltonianKind::new_search;
  throw ConfigError("hamiltonian.kind", "expected fg, fg_perturbed or new");
}

EngineMode parse_mode(std::string_view text) {
  if (text == "iterative") return EngineMode::iterative;
  if (text == "recursive") return EngineMode::recursive;
  throw ConfigError("search.mode", "expected iterative or recursive");
}

std::uint64_t inherit(std::uint64_t own, const std::optional<std::uint64_t>& master) {
  return own != 0 ? own : master.value_or(0);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

const char* to_string(Scenario scenario) noexcept {
  switch (scenario) {
    case Scenario::grover_baseline: return "grover_baseline";
    case Scenario::phase_mismatch: return "phase_mismatch";
    case Scenario::iterative: return "iterative";
    case Scenario::recursive: return "recursive";
    case Scenario::hamiltonian: return "hamiltonian";
    case Scenario::nondiagonal: return "nondiagonal";
    case Scenario::workspace: return "workspace";
    case Scenario::per_target_matching: return "per_target_matching";
  }
  return "?";
}

Scenario parse_scenario(std::string_view text) {
  text = trim(text);
  for (Scenario s : {Scenario::grover_baseline, Scenario::phase_mismatch, Scenario::iterative,
                     Scenario::recursive, Scenario::hamiltonian, Scenario::nondiagonal,
                     Scenario::workspace, Scenario::per_target_matching}) {
    if (text == to_string(s)) return s;
  }
  throw ConfigError("scenario", "unknown scenario '" + std::string(text) + "'");
}

std::string ExperimentConfig::to_text() const {
  std::ostringstream os;
  os << "[experiment]\n"
     << "scenario = " << qsearch::to_string(scenario) << '\n'
     << "n_qubits = " << n_qubits << '\n';
  if (seed) os << "seed = " << *seed << '\n';
  os << "output_path = " << output_path << '\n';

  os << "\n[targets]\n";
  if (!targets.indices.empty()) {
    os << "indices = ";
    for (std::size_t k = 0; k < targets.indices.size(); ++k) {
      os << (k ? "," : "") << targets.indices[k];
    }
    os << '\n';
  }
  os << "count = " << targets.count << '\n' << "seed = " << targets.seed << '\n';

  os << "\n[unitary]\n"
     << "kind = " << unitary.kind << '\n'
     << "ry_angles = " << join_doubles(unitary.ry_angles) << '\n'
     << "wht_first = " << (unitary.wht_first ? "true" : "false") << '\n'
     << "seed = " << unitary.seed << '\n';

  os << "\n[noise]\n" << noise.to_text();

  os << "\n[search]\n"
     << "phi = " << format_double(phi) << '\n'
     << "varphi = " << format_double(varphi) << '\n'
     << "phi_list = " << join_doubles(phi_list) << '\n'
     << "iterations = " << (iterations ? std::to_string(*iterations) : "auto") << '\n'
     << "levels = " << levels << '\n'
     << "success_c = " << format_double(success_c) << '\n'
     << "budget = " << budget << '\n'
     << "mode = " << qsearch::to_string(mode) << '\n';

  os << "\n[hamiltonian]\n"
     << "kind = " << to_string(hamiltonian.kind) << '\n'
     << "s = " << format_double(hamiltonian.s) << '\n'
     << "t_max = " << (hamiltonian.t_max ? format_double(*hamiltonian.t_max) : "auto") << '\n'
     << "samples = " << hamiltonian.samples << '\n'
     << "scale = " << format_double(hamiltonian.scale) << '\n';

  os << "\n[workspace]\n"
     << "ancilla_qubits = " << workspace.ancilla_qubits << '\n'
     << "a_op = " << workspace.a_op << '\n'
     << "b_op = " << workspace.b_op << '\n';

  os << "\n[nondiagonal]\n"
     << "ep_angle = " << format_double(nondiagonal.ep_angle) << '\n'
     << "eq_angle = " << format_double(nondiagonal.eq_angle) << '\n';

  os << "\n[sweep]\n" << "parameter = " << sweep.parameter << '\n' << "values = ";
  for (std::size_t k = 0; k < sweep.values.size(); ++k) os << (k ? ";" : "") << sweep.values[k];
  os << '\n';
  return os.str();
}

void ExperimentConfig::set(std::string_view key_in, std::string_view value_in) {
  std::string key(trim(key_in));
  const std::string_view value = trim(value_in);
  if (key.find('.') == std::string::npos) key = "experiment." + key;

  if (key == "experiment.scenario") {
    scenario = parse_scenario(value);
  } else if (key == "experiment.n_qubits") {
    const auto n = parse_unsigned("n_qubits", value);
    if (n == 0 || n > 63) throw ConfigError("n_qubits", "must be between 1 and 63");
    n_qubits = static_cast<unsigned>(n);
  } else if (key == "experiment.seed") {
    seed = parse_unsigned("seed", value);
  } else if (key == "experiment.output_path") {
    output_path = std::string(value);
  } else if (key == "targets.indices") {
    targets.indices = parse_list(value, ',', [](std::string_view v) {
      return static_cast<std::size_t>(parse_unsigned("targets.indices", v));
    });
  } else if (key == "targets.count") {
    targets.count = parse_unsigned("targets.count", value);
  } else if (key == "targets.seed") {
    targets.seed = parse_unsigned("targets.seed", value);
  } else if (key == "unitary.kind") {
    unitary.kind = std::string(value);
  } else if (key == "unitary.ry_angles") {
    unitary.ry_angles = parse_list(value, ',', [](std::string_view v) {
      return parse_real("unitary.ry_angles", v);
    });
  } else if (key == "unitary.wht_first") {
    unitary.wht_first = parse_bool("unitary.wht_first", value);
  } else if (key == "unitary.seed") {
    unitary.seed = parse_unsigned("unitary.seed", value);
  } else if (key == "noise.delta_t") {
    noise.delta_t = parse_real(key, value);
  } else if (key == "noise.delta_0") {
    noise.delta_0 = parse_real(key, value);
  } else if (key == "noise.law") {
    noise.law = parse_noise_law(value);
  } else if (key == "noise.seed") {
    noise.seed = parse_unsigned(key, value);
  } else if (key == "noise.offsets_t" || key == "noise.offsets_0") {
    auto list = parse_list(value, ',', [&](std::string_view v) { return parse_real(key, v); });
    (key == "noise.offsets_t" ? noise.offsets_t : noise.offsets_0) = std::move(list);
  } else if (key == "search.phi") {
    phi = parse_real(key, value);
  } else if (key == "search.varphi") {
    varphi = parse_real(key, value);
  } else if (key == "search.phi_list") {
    phi_list = parse_list(value, ',', [&](std::string_view v) { return parse_real(key, v); });
  } else if (key == "search.iterations") {
    if (value == "auto") {
      iterations.reset();
    } else {
      iterations = parse_unsigned(key, value);
    }
  } else if (key == "search.levels") {
    const auto m = parse_unsigned(key, value);
    if (m > 40) throw ConfigError(key, "at most 40 levels");
    levels = static_cast<unsigned>(m);
  } else if (key == "search.success_c") {
    success_c = parse_real(key, value);
  } else if (key == "search.budget") {
    budget = parse_unsigned(key, value);
  } else if (key == "search.mode") {
    mode = parse_mode(value);
  } else if (key == "hamiltonian.kind") {
    hamiltonian.kind = parse_hamiltonian_kind(value);
  } else if (key == "hamiltonian.s") {
    hamiltonian.s = parse_real(key, value);
  } else if (key == "hamiltonian.t_max") {
    if (value == "auto") {
      hamiltonian.t_max.reset();
    } else {
      hamiltonian.t_max = parse_real(key, value);
    }
  } else if (key == "hamiltonian.samples") {
    hamiltonian.samples = parse_unsigned(key, value);
  } else if (key == "hamiltonian.scale") {
    hamiltonian.scale = parse_real(key, value);
  } else if (key == "workspace.ancilla_qubits") {
    workspace.ancilla_qubits = static_cast<unsigned>(parse_unsigned(key, value));
  } else if (key == "workspace.a_op") {
    workspace.a_op = std::string(value);
  } else if (key == "workspace.b_op") {
    workspace.b_op = std::string(value);
  } else if (key == "nondiagonal.ep_angle") {
    nondiagonal.ep_angle = parse_real(key, value);
  } else if (key == "nondiagonal.eq_angle") {
    nondiagonal.eq_angle = parse_real(key, value);
  } else if (key == "sweep.parameter") {
    sweep.parameter = std::string(value);
  } else if (key == "sweep.values") {
    sweep.values = parse_list(value, ';', [](std::string_view v) { return std::string(v); });
  } else {
    throw ConfigError(key, "unknown key");
  }
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
  ExperimentConfig config;
  std::string section = "experiment";
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no), "unterminated section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    }
    config.set(section + "." + std::string(trim(line.substr(0, eq))), line.substr(eq + 1));
  }
  return config;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

void ExperimentConfig::validate() const {
  if (n_qubits == 0) throw ConfigError("n_qubits", "must be positive");
  if (n_qubits > kMaxQubits) {
    throw CapabilityError("n_qubits = " + std::to_string(n_qubits) + " exceeds the supported " +
                          std::to_string(kMaxQubits));
  }
  const std::size_t n = dim();
  if (!seed) throw ConfigError("seed", "a seed is required");

  if (!targets.indices.empty()) {
    for (std::size_t j : targets.indices) {
      if (j >= n) throw ConfigError("targets.indices", "index " + std::to_string(j) + " >= N");
    }
    if (targets.indices.size() >= n) throw ConfigError("targets.indices", "need M < N");
  } else if (targets.count == 0 || targets.count >= n) {
    throw ConfigError("targets.count", "need 1 <= M < N");
  }
  const std::size_t m = targets.indices.empty() ? targets.count : targets.indices.size();
  if (!phi_list.empty() && phi_list.size() != m) {
    throw ConfigError("search.phi_list", "needs one angle per target");
  }

  const auto& kind = unitary.kind;
  if (kind != "walsh_hadamard" && kind != "qubit_product" && kind != "dense_hadamard" &&
      kind != "dense_random") {
    throw ConfigError("unitary.kind", "unknown kind '" + kind + "'");
  }
  if (kind == "qubit_product" && !unitary.ry_angles.empty() &&
      unitary.ry_angles.size() != n_qubits) {
    throw ConfigError("unitary.ry_angles", "needs one angle per qubit");
  }

  const double limit = std::numbers::pi / 2.0;
  for (auto [field, value] : {std::pair{"noise.delta_t", noise.delta_t},
                              std::pair{"noise.delta_0", noise.delta_0}}) {
    if (!(value >= 0.0)) throw ConfigError(field, "must be non-negative");
    if (value >= limit) {
      throw ConfigError(field, "must be below pi/2: the error model assumes small perturbations "
                               "of the selective transformations");
    }
  }
  if (noise.law == NoiseLaw::per_index_list) {
    for (auto [field, list, delta] :
         {std::tuple{"noise.offsets_t", &noise.offsets_t, noise.delta_t},
          std::tuple{"noise.offsets_0", &noise.offsets_0, noise.delta_0}}) {
      if (list->size() != n) throw ConfigError(field, "needs N entries");
      for (double e : *list) {
        if (std::abs(e) > delta) throw ConfigError(field, "offset exceeds its delta bound");
      }
    }
  }

  const bool rotation_engine =
      scenario == Scenario::iterative ||
      ((scenario == Scenario::workspace || scenario == Scenario::nondiagonal) &&
       mode == EngineMode::iterative);
  if (rotation_engine && std::abs(std::sin(varphi / 2.0)) < 1e-12) {
    throw ConfigError("search.varphi", "must not be 0 mod 2pi");
  }
  if (!(success_c > 0.0) || success_c > 1.0) throw ConfigError("search.success_c", "need 0 < c <= 1");

  if (scenario == Scenario::hamiltonian) {
    if (hamiltonian.samples < 2) throw ConfigError("hamiltonian.samples", "need at least 2");
    if (hamiltonian.t_max && !(*hamiltonian.t_max > 0.0)) {
      throw ConfigError("hamiltonian.t_max", "must be positive");
    }
    if (!(hamiltonian.scale > 0.0)) throw ConfigError("hamiltonian.scale", "must be positive");
  }
  const bool dense = scenario == Scenario::hamiltonian || scenario == Scenario::nondiagonal ||
                     kind == "dense_hadamard" || kind == "dense_random";
  if (dense && n > kMaxDenseDim) {
    throw CapabilityError("dense representation needs N <= " + std::to_string(kMaxDenseDim) +
                          ", got N = " + std::to_string(n));
  }
  if (scenario == Scenario::workspace) {
    if (workspace.ancilla_qubits == 0) throw ConfigError("workspace.ancilla_qubits", "need w >= 1");
    if (workspace.ancilla_qubits > kMaxAncillaQubits) {
      throw CapabilityError("workspace: at most 4 ancilla qubits");
    }
    if (n_qubits + workspace.ancilla_qubits > 20) {
      throw CapabilityError("workspace: joint dimension exceeds 2^20");
    }
    make_workspace_op(workspace.a_op, workspace.ancilla_qubits);
    make_workspace_op(workspace.b_op, workspace.ancilla_qubits);
  }
  for (double a : {nondiagonal.ep_angle, nondiagonal.eq_angle}) {
    if (!(a >= 0.0)) throw ConfigError("nondiagonal", "angles must be non-negative");
  }
}

TargetSet make_targets(const ExperimentConfig& config) {
  if (!config.targets.indices.empty()) return TargetSet(config.dim(), config.targets.indices);
  return TargetSet::random(config.dim(), config.targets.count,
                           inherit(config.targets.seed, config.seed));
}

UnitaryFamily make_unitary(const ExperimentConfig& config) {
  const std::size_t n = config.dim();
  const auto& kind = config.unitary.kind;
  if (kind == "walsh_hadamard") return UnitaryFamily::walsh_hadamard(n);
  if (kind == "qubit_product") {
    std::vector<ProductLayer> layers;
    if (config.unitary.wht_first) layers.emplace_back(WalshLayer{});
    QubitLayer q;
    for (unsigned k = 0; k < config.n_qubits; ++k) {
      const double a = config.unitary.ry_angles.empty() ? 0.0 : config.unitary.ry_angles[k];
      q.gates.push_back(ry_gate(a));
    }
    layers.emplace_back(std::move(q));
    return UnitaryFamily::qubit_product(n, std::move(layers));
  }
  if (n > kMaxDenseDim) throw CapabilityError("dense unitary needs N <= 4096");
  if (kind == "dense_hadamard") return UnitaryFamily::dense(hadamard_matrix(n));
  if (kind == "dense_random") {
    return UnitaryFamily::dense(haar_unitary(n, inherit(config.unitary.seed, config.seed)));
  }
  throw ConfigError("unitary.kind", "unknown kind '" + kind + "'");
}

DenseMatrix make_workspace_op(std::string_view spec, unsigned ancilla_qubits) {
  const auto w = static_cast<Eigen::Index>(std::size_t{1} << ancilla_qubits);
  spec = trim(spec);
  const auto colon = spec.find(':');
  const std::string_view name = colon == std::string_view::npos ? spec : spec.substr(0, colon);
  double angle = 0.0;
  if (colon != std::string_view::npos) angle = parse_real("workspace op", spec.substr(colon + 1));
  const bool has_angle = colon != std::string_view::npos;

  if (name == "identity" && !has_angle) return DenseMatrix::Identity(w, w);
  if (name == "neg_identity" && !has_angle) return -DenseMatrix::Identity(w, w);
  if (name == "phase" && has_angle) {
    return std::polar(1.0, angle) * DenseMatrix::Identity(w, w);
  }
  if ((name == "rotation" || name == "neg_rotation") && has_angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    const double r[2][2] = {{c, -s}, {s, c}};
    DenseMatrix m = DenseMatrix::Zero(w, w);
    for (Eigen::Index i = 0; i < w; ++i) {
      for (Eigen::Index j = 0; j < w; ++j) {
        if ((i >> 1) == (j >> 1)) m(i, j) = r[i & 1][j & 1];
      }
    }
    return name == "rotation" ? m : DenseMatrix(-m);
  }
  throw ConfigError("workspace", "unknown operator '" + std::string(spec) + "'");
}

}  // namespace qsearch
