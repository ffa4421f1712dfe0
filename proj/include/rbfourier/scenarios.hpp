#ifndef RBFOURIER_SCENARIOS_HPP_
#define RBFOURIER_SCENARIOS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbfourier/gauge.hpp"
#include "rbfourier/rb.hpp"

namespace rbf {

// Assets shared by the qubit scenarios: the 24-element transfer-matrix group
// closed over the pi/2 generators, its irreps, the ideal gate-set and its
// spectrum.
struct QubitCliffordAssets {
  GroupTablePtr table;
  IrrepRegistry registry;
  MatrixFunction ideal;
  FourierSpectrum ideal_spectrum;
};

const QubitCliffordAssets& qubit_clifford_assets();

// Full single-gate-set analysis: spectral summary, bounds, both gauges,
// complete-positivity report per gate (computational and depolarizing gauge).
struct GateSetAnalysis {
  SpectralSummary summary;
  std::vector<BoundCheck> bounds;
  GaugeTransform dep;
  GaugeTransform opt;
  double fidelity_computational = 0.0;
  std::vector<double> choi_min_computational;  // per gate
  std::vector<double> choi_min_dep_gauge;
};

GateSetAnalysis analyze_gate_set(const MatrixFunction& gate_set, const QubitCliffordAssets& assets);

struct ProctorResult {
  double theta = 0.0;
  std::uint64_t seed = 0;
  GateSetAnalysis analysis;
  std::vector<LengthStats> decay;
  DecayModel fit;
  bool fit_valid = false;
};

// Clifford group compiled from z-detuned pi/2 generators
// (error exp(-i theta sigma_z/2) after each pulse).
ProctorResult run_proctor(double theta, std::uint64_t seed,
                          const std::vector<int>& lengths = {},
                          int sequences_per_length = 0);

// The faulty gate-set alone (used by rb tests and the custom cross-check).
MatrixFunction proctor_gate_set(double theta);

struct WallmanSample {
  std::vector<int> z_error_subset;  // which Cliffords carry the extra z-error
  double err_computational = 0.0;
  double err_depolarizing = 0.0;
  double err_optimal = 0.0;
};

struct WallmanResult {
  double nu = 0.0;
  double theta = 0.0;
  std::uint64_t seed = 0;
  std::vector<WallmanSample> samples;
  double mean_computational = 0.0, stdev_computational = 0.0;
  double mean_depolarizing = 0.0, stdev_depolarizing = 0.0;
  double mean_optimal = 0.0, stdev_optimal = 0.0;
  double min_depolarizing = 0.0, max_depolarizing = 0.0;
  double min_optimal = 0.0, max_optimal = 0.0;
};

// Uniform depolarizing noise on every Clifford plus a z-error on a uniformly
// random half of them; reports gauge-dependent error statistics over the
// sampled ensemble.
WallmanResult run_wallman(double nu, double theta, int n_samples, std::uint64_t seed);

// One Wallman gate-set for a given subset of error-carrying Cliffords.
MatrixFunction wallman_gate_set(double nu, double theta, const std::vector<int>& subset);

struct LeakageResult {
  int embedded_unit_eigenvalues = 0;
  std::map<std::string, int> unit_multiplicity_per_irrep;
  double largest_non_unit_magnitude = 0.0;
  int unembedded_unit_eigenvalues = 0;
  int embedded_group_order = 0;
  int unembedded_group_order = 0;
};

// Ideal qubit gates embedded as qutrit operations acting trivially on the
// leakage level, analyzed over the 48-element group they generate.
LeakageResult run_leakage();

// Custom gate-set configuration (key-value sections, matrices row-major).
struct GateSetConfig {
  std::string group = "qubit_clifford";
  std::string basis = "pauli";
  std::uint64_t seed = 0;
  std::vector<int> lengths;
  int samples = 0;
  std::map<std::string, MatrixXd> gates;  // canonical word -> transfer matrix
};

GateSetConfig parse_gate_set_config(std::istream& in);
GateSetConfig load_gate_set_config(const std::string& path);
void write_gate_set_config(std::ostream& out, const GateSetConfig& config);

struct CustomResult {
  GateSetConfig config;
  GateSetAnalysis analysis;
  std::vector<LengthStats> decay;
  DecayModel fit;
  bool fit_valid = false;
};

CustomResult run_custom(const GateSetConfig& config);
CustomResult run_custom_file(const std::string& path);

// Machine-readable reports.
nlohmann::json to_json(const ProctorResult& r);
nlohmann::json to_json(const WallmanResult& r);
nlohmann::json to_json(const LeakageResult& r);
nlohmann::json to_json(const CustomResult& r);

// Pseudorandom completely positive, trace-non-increasing gate-set: random
// Kraus channels near the identity composed with the ideal gates and a
// uniform trace scale in (0.93, 1].  The generator redraws until the average
// infidelity delta stays below 0.133 (the regime where the q bound is
// meaningful for one qubit).
MatrixFunction random_cp_gate_set(std::uint64_t seed);

// Condensed property suite behind the `selftest` subcommand; returns the
// number of failed checks and prints one line per check.
int run_selftest(std::ostream& out, std::uint64_t seed);

}  // namespace rbf

#endif  // RBFOURIER_SCENARIOS_HPP_
