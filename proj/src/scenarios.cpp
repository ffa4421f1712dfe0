#include "rbfourier/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "rbfourier/errors.hpp"
#include "rbfourier/report_io.hpp"
#include "rbfourier/rng.hpp"

namespace rbf {

namespace {

MatrixFunction function_of_table_elements(GroupTablePtr table) {
  MatrixFunction f;
  f.table = table;
  f.dim = table->dim();
  f.values = table->elements;
  return f;
}

MatrixXd depolarizing_ptm(double nu) {
  MatrixXd d = nu * MatrixXd::Identity(4, 4);
  d(0, 0) = 1.0;
  return d;
}

std::vector<int> default_lengths() { return {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}; }

double vector_mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double vector_stdev(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace

const QubitCliffordAssets& qubit_clifford_assets() {
  static const QubitCliffordAssets assets = [] {
    QubitCliffordAssets a;
    const auto& basis = OperatorBasis::pauli();
    MatrixXcd gen_x = unitary_to_process(clifford_gen_x(), basis).entries.cast<complexd>();
    MatrixXcd gen_y = unitary_to_process(clifford_gen_y(), basis).entries.cast<complexd>();
    a.table = std::make_shared<const GroupTable>(
        close_group({{'x', gen_x}, {'y', gen_y}}, 64));
    a.registry = builtin_irreps(a.table, BuiltinGroup::S4);
    a.ideal = function_of_table_elements(a.table);
    a.ideal_spectrum = fourier_transform(a.ideal, a.registry);
    return a;
  }();
  return assets;
}

GateSetAnalysis analyze_gate_set(const MatrixFunction& gate_set,
                                 const QubitCliffordAssets& assets) {
  GateSetAnalysis out;
  FourierSpectrum spectrum = fourier_transform(gate_set, assets.registry);
  out.summary = spectral_summary(spectrum, assets.ideal_spectrum);
  out.bounds = check_bounds(out.summary, 1);
  out.dep = depolarizing_gauge(spectrum, assets.ideal, assets.registry);
  out.opt = optimal_gauge(spectrum, assets.ideal, assets.registry);
  out.fidelity_computational = average_entanglement_fidelity(gate_set, assets.ideal);
  const auto& basis = OperatorBasis::pauli();
  for (int g = 0; g < assets.table->order; ++g) {
    out.choi_min_computational.push_back(
        choi_cp_check(MatrixXd(gate_set(g).real()), basis).min_eigenvalue);
    out.choi_min_dep_gauge.push_back(
        choi_cp_check(MatrixXd(out.dep.transformed(g).real()), basis).min_eigenvalue);
  }
  return out;
}

namespace {

// Pulse compilation of the 24 Cliffords over the x/y quarter-turn pulses.
// Strings are operator products read left to right (leftmost factor is the
// leftmost matrix).  Fixed independently of the group table's shortest-word
// search so that compiled-pulse analyses are stable.
constexpr const char* kCliffordPulseWords[24] = {
    "",       "xx",     "yy",      "yyyxxy",                              // identity class
    "x",      "y",      "xxx",     "yyy",    "yyyxy",  "yyyxxxy",         // quarter turns
    "xxy",    "yxx",    "xyy",     "yyx",    "yxy",    "yyyxyyy",         // half turns
    "xy",     "yx",     "xxxyyy",  "yyyxxx", "xyyy",   "yyyx",   "xxxy", "yxxx"};

}  // namespace

MatrixFunction proctor_gate_set(double theta) {
  const auto& assets = qubit_clifford_assets();
  const auto& basis = OperatorBasis::pauli();
  const std::map<char, MatrixXcd> ideal_pulse = {{'x', clifford_gen_x()},
                                                 {'y', clifford_gen_y()}};
  const std::map<char, MatrixXcd> faulty_pulse = {{'x', rot_z(theta) * clifford_gen_x()},
                                                  {'y', rot_z(theta) * clifford_gen_y()}};
  MatrixFunction f;
  f.table = assets.table;
  f.dim = 4;
  f.values.assign(static_cast<size_t>(assets.table->order), MatrixXcd());
  std::vector<bool> assigned(static_cast<size_t>(assets.table->order), false);
  for (const char* word : kCliffordPulseWords) {
    MatrixXcd u_ideal = MatrixXcd::Identity(2, 2);
    MatrixXcd u_faulty = MatrixXcd::Identity(2, 2);
    for (const char* c = word; *c; ++c) {
      u_ideal = u_ideal * ideal_pulse.at(*c);
      u_faulty = u_faulty * faulty_pulse.at(*c);
    }
    MatrixXcd ptm_ideal = unitary_to_process(u_ideal, basis).entries.cast<complexd>();
    int index = -1;
    for (int g = 0; g < assets.table->order; ++g)
      if (max_abs(assets.ideal(g) - ptm_ideal) < 1e-9) {
        index = g;
        break;
      }
    if (index < 0 || assigned[static_cast<size_t>(index)])
      fail(ErrorCode::ValidationError, "pulse compilation table is not a bijection");
    assigned[static_cast<size_t>(index)] = true;
    f.values[static_cast<size_t>(index)] =
        unitary_to_process(u_faulty, basis).entries.cast<complexd>();
  }
  return f;
}

ProctorResult run_proctor(double theta, std::uint64_t seed, const std::vector<int>& lengths,
                          int sequences_per_length) {
  if (!std::isfinite(theta))
    fail(ErrorCode::ValidationError, "theta must be finite");
  const auto& assets = qubit_clifford_assets();
  ProctorResult result;
  result.theta = theta;
  result.seed = seed;
  MatrixFunction gate_set = proctor_gate_set(theta);
  result.analysis = analyze_gate_set(gate_set, assets);

  RbConfig config;
  config.gate_set = gate_set;
  config.ideal = assets.ideal;
  config.rho = ground_state_vector();
  config.meas = ground_state_effect();
  config.lengths = lengths.empty() ? default_lengths() : lengths;
  config.sequences_per_length = sequences_per_length > 0 ? sequences_per_length : 200;
  config.seed = seed;
  result.decay = rb_monte_carlo(config, assets.registry);

  std::vector<std::pair<int, double>> points;
  for (const auto& ls : result.decay) points.emplace_back(ls.m, ls.mean);
  try {
    result.fit = fit_decay(points, FitMode::Single);
    result.fit_valid = true;
  } catch (const Error&) {
    result.fit_valid = false;
  }
  return result;
}

MatrixFunction wallman_gate_set(double nu, double theta, const std::vector<int>& subset) {
  const auto& assets = qubit_clifford_assets();
  MatrixXcd dep = depolarizing_ptm(nu).cast<complexd>();
  MatrixXcd z_err =
      unitary_to_process(rot_z(theta), OperatorBasis::pauli()).entries.cast<complexd>();
  std::vector<bool> flagged(static_cast<size_t>(assets.table->order), false);
  for (int g : subset) flagged.at(static_cast<size_t>(g)) = true;

  MatrixFunction f;
  f.table = assets.table;
  f.dim = 4;
  for (int g = 0; g < assets.table->order; ++g) {
    MatrixXcd noise = flagged[static_cast<size_t>(g)] ? MatrixXcd(dep * z_err) : dep;
    f.values.push_back(noise * assets.ideal(g));
  }
  return f;
}

WallmanResult run_wallman(double nu, double theta, int n_samples, std::uint64_t seed) {
  if (!(nu > 0.0 && nu <= 1.0))
    fail(ErrorCode::ValidationError, "nu must lie in (0, 1]");
  if (n_samples < 1)
    fail(ErrorCode::ValidationError, "n_samples must be at least 1");
  const auto& assets = qubit_clifford_assets();
  const int order = assets.table->order;

  WallmanResult result;
  result.nu = nu;
  result.theta = theta;
  result.seed = seed;
  std::vector<double> err_comp, err_dep, err_opt;
  for (int sample = 0; sample < n_samples; ++sample) {
    SplitMix64 rng = substream(seed, 0x57414c4cull, static_cast<std::uint64_t>(sample));
    std::vector<int> perm(static_cast<size_t>(order));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < order / 2; ++i) {
      int j = i + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(order - i)));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    WallmanSample ws;
    ws.z_error_subset.assign(perm.begin(), perm.begin() + order / 2);
    std::sort(ws.z_error_subset.begin(), ws.z_error_subset.end());

    MatrixFunction gate_set = wallman_gate_set(nu, theta, ws.z_error_subset);
    FourierSpectrum spectrum = fourier_transform(gate_set, assets.registry);
    ws.err_computational = 1.0 - average_entanglement_fidelity(gate_set, assets.ideal);
    ws.err_depolarizing =
        1.0 - depolarizing_gauge(spectrum, assets.ideal, assets.registry).fidelity;
    ws.err_optimal = 1.0 - optimal_gauge(spectrum, assets.ideal, assets.registry).fidelity;
    err_comp.push_back(ws.err_computational);
    err_dep.push_back(ws.err_depolarizing);
    err_opt.push_back(ws.err_optimal);
    result.samples.push_back(std::move(ws));
  }
  result.mean_computational = vector_mean(err_comp);
  result.stdev_computational = vector_stdev(err_comp, result.mean_computational);
  result.mean_depolarizing = vector_mean(err_dep);
  result.stdev_depolarizing = vector_stdev(err_dep, result.mean_depolarizing);
  result.mean_optimal = vector_mean(err_opt);
  result.stdev_optimal = vector_stdev(err_opt, result.mean_optimal);
  result.min_depolarizing = *std::min_element(err_dep.begin(), err_dep.end());
  result.max_depolarizing = *std::max_element(err_dep.begin(), err_dep.end());
  result.min_optimal = *std::min_element(err_opt.begin(), err_opt.end());
  result.max_optimal = *std::max_element(err_opt.begin(), err_opt.end());
  return result;
}

LeakageResult run_leakage() {
  LeakageResult result;

  MatrixXcd embedded_x = MatrixXcd::Identity(3, 3);
  embedded_x.topLeftCorner(2, 2) = clifford_gen_x();
  MatrixXcd embedded_y = MatrixXcd::Identity(3, 3);
  embedded_y.topLeftCorner(2, 2) = clifford_gen_y();
  auto table48 = std::make_shared<const GroupTable>(
      close_group({{'x', embedded_x}, {'y', embedded_y}}, 128));
  result.embedded_group_order = table48->order;

  IrrepRegistry registry48 = builtin_irreps(table48, BuiltinGroup::CSU23);
  MatrixFunction gate_set = process_function_of_elements(table48, OperatorBasis::gell_mann());
  FourierSpectrum spectrum = fourier_transform(gate_set, registry48);
  for (const auto& block : spectrum.blocks) {
    int units = 0;
    for (const complexd& ev : block.eigenvalues) {
      if (std::abs(ev - 1.0) <= 1e-9) {
        ++units;
      } else if (std::abs(ev) > result.largest_non_unit_magnitude) {
        result.largest_non_unit_magnitude = std::abs(ev);
      }
    }
    if (units > 0) result.unit_multiplicity_per_irrep[block.irrep_name] = units;
    result.embedded_unit_eigenvalues += units;
  }

  const auto& assets = qubit_clifford_assets();
  result.unembedded_group_order = assets.table->order;
  for (const auto& block : assets.ideal_spectrum.blocks)
    for (const complexd& ev : block.eigenvalues)
      if (std::abs(ev - 1.0) <= 1e-9) ++result.unembedded_unit_eigenvalues;
  return result;
}

namespace {

std::vector<double> parse_numbers(const std::string& text, int line_no) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    try {
      size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": '" + token + "' is not a number");
    }
  }
  return out;
}

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  auto end = s.find_last_not_of(" \t\r");
  return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
}

}  // namespace

GateSetConfig parse_gate_set_config(std::istream& in) {
  GateSetConfig config;
  std::string line, section;
  int line_no = 0;
  std::string gate_word;
  std::vector<double> gate_numbers;
  bool gate_open = false;

  auto close_gate = [&]() {
    if (!gate_open) return;
    const size_t n = gate_numbers.size();
    const auto side = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
    if (side * side != static_cast<Eigen::Index>(n) || n == 0)
      fail(ErrorCode::ValidationError,
           "gate '" + gate_word + "': matrix has " + std::to_string(n) +
               " entries, which is not a square count");
    MatrixXd m(side, side);
    for (Eigen::Index i = 0; i < side; ++i)
      for (Eigen::Index j = 0; j < side; ++j)
        m(i, j) = gate_numbers[static_cast<size_t>(i * side + j)];
    if (!m.allFinite())
      fail(ErrorCode::ValidationError, "gate '" + gate_word + "': non-finite entries");
    config.gates[gate_word] = std::move(m);
    gate_numbers.clear();
    gate_open = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unterminated section");
      close_gate();
      section = trim(line.substr(1, line.size() - 2));
      if (section.rfind("gate ", 0) == 0) {
        gate_word = trim(section.substr(5));
        if (gate_word.empty())
          fail(ErrorCode::ParseError,
               "line " + std::to_string(line_no) + ": gate section without a word");
        gate_open = true;
        section = "gate";
      } else if (section == "gate") {
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": gate section without a word");
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (section == "gateset") {
      if (key == "group") config.group = value;
      else if (key == "basis") config.basis = value;
      else fail(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": unknown gateset key '" + key + "'");
    } else if (section == "rb") {
      if (key == "seed") config.seed = std::stoull(value);
      else if (key == "samples") config.samples = std::stoi(value);
      else if (key == "lengths") {
        for (double v : parse_numbers(value, line_no))
          config.lengths.push_back(static_cast<int>(std::llround(v)));
      } else {
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": unknown rb key '" + key + "'");
      }
    } else if (section == "gate") {
      if (key == "matrix") {
        auto numbers = parse_numbers(value, line_no);
        gate_numbers.insert(gate_numbers.end(), numbers.begin(), numbers.end());
      } else {
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": unknown gate key '" + key + "'");
      }
    } else {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": key outside a known section");
    }
  }
  close_gate();
  return config;
}

GateSetConfig load_gate_set_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open config file " + path);
  return parse_gate_set_config(in);
}

void write_gate_set_config(std::ostream& out, const GateSetConfig& config) {
  out << "[gateset]\n";
  out << "group = " << config.group << "\n";
  out << "basis = " << config.basis << "\n\n";
  out << "[rb]\n";
  out << "seed = " << config.seed << "\n";
  if (config.samples > 0) out << "samples = " << config.samples << "\n";
  if (!config.lengths.empty()) {
    out << "lengths =";
    for (int m : config.lengths) out << ' ' << m;
    out << "\n";
  }
  out << std::setprecision(17);
  for (const auto& [word, matrix] : config.gates) {
    out << "\n[gate " << word << "]\nmatrix =";
    for (Eigen::Index i = 0; i < matrix.rows(); ++i)
      for (Eigen::Index j = 0; j < matrix.cols(); ++j) out << ' ' << matrix(i, j);
    out << "\n";
  }
}

CustomResult run_custom(const GateSetConfig& config) {
  if (config.group != "qubit_clifford")
    fail(ErrorCode::ValidationError, "unsupported group '" + config.group + "'");
  if (config.basis != "pauli")
    fail(ErrorCode::ValidationError, "unsupported basis '" + config.basis + "'");
  const auto& assets = qubit_clifford_assets();

  MatrixFunction gate_set;
  gate_set.table = assets.table;
  gate_set.dim = 4;
  for (int g = 0; g < assets.table->order; ++g) {
    const std::string& word = assets.table->words[static_cast<size_t>(g)];
    const std::string key = word.empty() ? "e" : word;
    auto it = config.gates.find(key);
    if (it == config.gates.end())
      fail(ErrorCode::ValidationError, "missing gate for word '" + key + "'");
    if (it->second.rows() != 4 || it->second.cols() != 4)
      fail(ErrorCode::ValidationError,
           "gate '" + key + "' must be 4x4, got " + std::to_string(it->second.rows()) + "x" +
               std::to_string(it->second.cols()));
    gate_set.values.push_back(it->second.cast<complexd>());
  }

  CustomResult result;
  result.config = config;
  result.analysis = analyze_gate_set(gate_set, assets);
  if (!config.lengths.empty()) {
    RbConfig rb;
    rb.gate_set = gate_set;
    rb.ideal = assets.ideal;
    rb.rho = ground_state_vector();
    rb.meas = ground_state_effect();
    rb.lengths = config.lengths;
    rb.sequences_per_length = config.samples > 0 ? config.samples : 100;
    rb.seed = config.seed;
    result.decay = rb_monte_carlo(rb, assets.registry);
    std::vector<std::pair<int, double>> points;
    for (const auto& ls : result.decay) points.emplace_back(ls.m, ls.mean);
    try {
      result.fit = fit_decay(points, FitMode::Single);
      result.fit_valid = true;
    } catch (const Error&) {
      result.fit_valid = false;
    }
  }
  return result;
}

CustomResult run_custom_file(const std::string& path) {
  return run_custom(load_gate_set_config(path));
}

MatrixFunction random_cp_gate_set(std::uint64_t seed) {
  const auto& assets = qubit_clifford_assets();
  const auto& basis = OperatorBasis::pauli();

  for (int attempt = 0; attempt < 16; ++attempt) {
    SplitMix64 rng = substream(seed, 0xC9A5ull, static_cast<std::uint64_t>(attempt));
    auto gauss = [&rng]() {
      // Box-Muller
      double u1 = std::max(rng.next_double(), 1e-300);
      double u2 = rng.next_double();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    };
    const double eps = 0.02 + 0.03 * rng.next_double();
    const double scale = 0.93 + 0.07 * rng.next_double();  // uniform trace decrease

    MatrixFunction f;
    f.table = assets.table;
    f.dim = 4;
    for (int g = 0; g < assets.table->order; ++g) {
      std::vector<MatrixXcd> kraus;
      for (int k = 0; k < 3; ++k) {
        MatrixXcd r(2, 2);
        for (int i = 0; i < 4; ++i) r(i / 2, i % 2) = complexd(gauss(), gauss());
        kraus.push_back(k == 0 ? MatrixXcd(MatrixXcd::Identity(2, 2) + eps * r)
                               : MatrixXcd(eps * r));
      }
      MatrixXcd total = MatrixXcd::Zero(2, 2);
      for (const auto& op : kraus) total += op.adjoint() * op;
      Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(total);
      MatrixXcd normalize = eig.eigenvectors() *
                            eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                            eig.eigenvectors().adjoint();
      for (auto& op : kraus) op = op * normalize;  // sum K^dag K = I
      MatrixXd noise = kraus_to_process(kraus, basis).entries;
      f.values.push_back((scale * noise * assets.ideal(g).real()).cast<complexd>());
    }
    if (1.0 - average_entanglement_fidelity(f, assets.ideal) < 0.133) return f;
  }
  fail(ErrorCode::ValidationError, "could not draw a gate-set with delta below 13.3%");
}

int run_selftest(std::ostream& out, std::uint64_t seed) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "  ok    " : "  FAIL  ") << name << "\n";
    if (!ok) ++failures;
  };

  const auto& assets = qubit_clifford_assets();
  check("qubit transfer-matrix group has order 24", assets.table->order == 24);
  check("group axioms hold exhaustively", assets.table->verify_axioms());
  check("5 conjugacy classes", assets.table->classes.size() == 5);
  check("sum of squared irrep dims is 24", assets.registry.sum_of_squared_dims() == 24);
  check("character rows orthonormal",
        assets.registry.character_orthonormality_defect() < 1e-10);

  check("ideal spectrum has exactly two rank-1 blocks", [&] {
    int nonzero = 0;
    for (const auto& b : assets.ideal_spectrum.blocks)
      if (b.singular_values.front() > 0.5) nonzero += (b.rank() == 1) ? 1 : 100;
    return nonzero == 2;
  }());

  {
    SplitMix64 rng = substream(seed, 0x5e1f, 0);
    bool parseval_ok = true, inverse_ok = true, conv_ok = true;
    for (int trial = 0; trial < 5; ++trial) {
      MatrixFunction phi, eta;
      phi.table = eta.table = assets.table;
      phi.dim = eta.dim = 4;
      for (int g = 0; g < 24; ++g) {
        MatrixXcd a(4, 4), b(4, 4);
        for (int i = 0; i < 16; ++i) {
          a(i / 4, i % 4) = complexd(rng.next_double() - 0.5, rng.next_double() - 0.5);
          b(i / 4, i % 4) = complexd(rng.next_double() - 0.5, rng.next_double() - 0.5);
        }
        phi.values.push_back(a);
        eta.values.push_back(b);
      }
      auto [lhs, rhs] = parseval_check(phi, eta, assets.registry);
      parseval_ok = parseval_ok && std::abs(lhs - rhs) < 1e-10;
      conv_ok = conv_ok && convolve_check(phi, eta, assets.registry) < 1e-10;
      FourierSpectrum spec = fourier_transform(phi, assets.registry);
      for (int g = 0; g < 24; g += 7)
        inverse_ok = inverse_ok &&
                     max_abs(inverse_transform(spec, assets.registry, g) - phi(g)) < 1e-10;
    }
    check("Parseval identity on random functions", parseval_ok);
    check("convolution formula on random functions", conv_ok);
    check("inverse transform round-trips", inverse_ok);
  }

  {
    MatrixFunction gate_set = proctor_gate_set(0.1);
    RbConfig config;
    config.gate_set = gate_set;
    config.ideal = assets.ideal;
    config.rho = ground_state_vector();
    config.meas = ground_state_effect();
    double exact = rb_exact(config, assets.registry, 2);
    double brute = 0.0;
    for (int c = 0; c < 24; ++c) {
      VectorXd state = gate_set(c).real() * config.rho;
      state = gate_set(assets.table->inv[c]).real() * state;
      brute += config.meas.dot(state);
    }
    brute /= 24.0;
    check("exact RB average matches enumeration at m=2", std::abs(exact - brute) < 1e-12);
  }

  {
    bool bounds_ok = true;
    for (int i = 0; i < 25; ++i) {
      MatrixFunction random_set = random_cp_gate_set(seed + 1000 + i);
      FourierSpectrum spec = fourier_transform(random_set, assets.registry);
      SpectralSummary summary = spectral_summary(spec, assets.ideal_spectrum);
      for (const auto& bound : check_bounds(summary, 1)) bounds_ok = bounds_ok && bound.holds;
    }
    check("fidelity bounds hold on random CP gate-sets", bounds_ok);
  }

  {
    MatrixFunction gate_set = wallman_gate_set(0.99, 0.09, {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22});
    FourierSpectrum spec = fourier_transform(gate_set, assets.registry);
    double f_comp = average_entanglement_fidelity(gate_set, assets.ideal);
    double f_dep = depolarizing_gauge(spec, assets.ideal, assets.registry).fidelity;
    double f_opt = optimal_gauge(spec, assets.ideal, assets.registry).fidelity;
    check("optimal gauge dominates the other gauges",
          f_opt >= f_dep - 1e-12 && f_opt >= f_comp - 1e-12);
  }

  check("leakage embedding has five unit eigenvalues", [&] {
    LeakageResult r = run_leakage();
    return r.embedded_unit_eigenvalues == 5 && r.unembedded_unit_eigenvalues == 2 &&
           r.embedded_group_order == 48;
  }());

  out << (failures == 0 ? "selftest: all checks passed\n"
                        : "selftest: " + std::to_string(failures) + " check(s) failed\n");
  return failures;
}

nlohmann::json to_json(const ProctorResult& r) {
  nlohmann::json j;
  j["scenario"] = "proctor";
  j["params"] = {{"theta", r.theta}};
  j["seed"] = r.seed;
  j["spectral"] = summary_to_json(r.analysis.summary);
  j["bounds"] = bounds_to_json(r.analysis.bounds);
  j["gauges"] = {
      {"computational",
       {{"fidelity", r.analysis.fidelity_computational},
        {"error", 1.0 - r.analysis.fidelity_computational}}},
      {"depolarizing", gauge_to_json(r.analysis.dep)},
      {"optimal", gauge_to_json(r.analysis.opt)},
  };
  j["choi_min_computational"] = r.analysis.choi_min_computational;
  j["choi_min_dep_gauge"] = r.analysis.choi_min_dep_gauge;
  nlohmann::json decay = nlohmann::json::array();
  for (const auto& ls : r.decay)
    decay.push_back({{"m", ls.m},
                     {"mean", ls.mean},
                     {"stderr", ls.stderr_mean},
                     {"exact", ls.exact}});
  j["decay"] = decay;
  if (r.fit_valid) j["fit"] = decay_model_to_json(r.fit);
  return j;
}

nlohmann::json to_json(const WallmanResult& r) {
  nlohmann::json j;
  j["scenario"] = "wallman";
  j["params"] = {{"nu", r.nu}, {"theta", r.theta}, {"n_samples", r.samples.size()}};
  j["seed"] = r.seed;
  j["computational"] = {{"mean", r.mean_computational}, {"stdev", r.stdev_computational}};
  j["depolarizing"] = {{"mean", r.mean_depolarizing},
                       {"stdev", r.stdev_depolarizing},
                       {"min", r.min_depolarizing},
                       {"max", r.max_depolarizing}};
  j["optimal"] = {{"mean", r.mean_optimal},
                  {"stdev", r.stdev_optimal},
                  {"min", r.min_optimal},
                  {"max", r.max_optimal}};
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"subset", s.z_error_subset},
                       {"err_computational", s.err_computational},
                       {"err_depolarizing", s.err_depolarizing},
                       {"err_optimal", s.err_optimal}});
  j["samples"] = samples;
  return j;
}

nlohmann::json to_json(const LeakageResult& r) {
  nlohmann::json j;
  j["scenario"] = "leakage";
  j["embedded"] = {{"group_order", r.embedded_group_order},
                   {"unit_eigenvalues", r.embedded_unit_eigenvalues},
                   {"per_irrep", r.unit_multiplicity_per_irrep},
                   {"largest_non_unit", r.largest_non_unit_magnitude}};
  j["unembedded"] = {{"group_order", r.unembedded_group_order},
                     {"unit_eigenvalues", r.unembedded_unit_eigenvalues}};
  return j;
}

nlohmann::json to_json(const CustomResult& r) {
  nlohmann::json j;
  j["scenario"] = "custom";
  j["params"] = {{"group", r.config.group}, {"basis", r.config.basis}};
  j["seed"] = r.config.seed;
  j["spectral"] = summary_to_json(r.analysis.summary);
  j["bounds"] = bounds_to_json(r.analysis.bounds);
  j["gauges"] = {
      {"computational",
       {{"fidelity", r.analysis.fidelity_computational},
        {"error", 1.0 - r.analysis.fidelity_computational}}},
      {"depolarizing", gauge_to_json(r.analysis.dep)},
      {"optimal", gauge_to_json(r.analysis.opt)},
  };
  j["choi_min_computational"] = r.analysis.choi_min_computational;
  j["choi_min_dep_gauge"] = r.analysis.choi_min_dep_gauge;
  nlohmann::json decay = nlohmann::json::array();
  for (const auto& ls : r.decay)
    decay.push_back({{"m", ls.m},
                     {"mean", ls.mean},
                     {"stderr", ls.stderr_mean},
                     {"exact", ls.exact}});
  j["decay"] = decay;
  if (r.fit_valid) j["fit"] = decay_model_to_json(r.fit);
  return j;
}

}  // namespace rbf
