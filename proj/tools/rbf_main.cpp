#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbfourier/errors.hpp"
#include "rbfourier/report_io.hpp"
#include "rbfourier/scenarios.hpp"

namespace {

namespace fs = std::filesystem;

void write_report(const fs::path& out_dir, const nlohmann::json& report) {
  fs::create_directories(out_dir);
  std::ofstream out(out_dir / "report.json");
  out << report.dump(2) << "\n";
  std::cout << "report: " << (out_dir / "report.json").string() << "\n";
}

void print_analysis(const rbf::GateSetAnalysis& a) {
  std::cout << std::setprecision(10);
  std::cout << "  delta (computational-basis error) : " << a.summary.delta << "\n";
  std::cout << "  t_bar, p_bar (decay eigenvalues)   : " << a.summary.t_bar << ", "
            << a.summary.p_bar << "\n";
  std::cout << "  next singular value q              : " << a.summary.q << " ("
            << a.summary.q_irrep_name << ")\n";
  std::cout << "  gauge errors  comp / dep / opt     : " << 1.0 - a.fidelity_computational
            << " / " << 1.0 - a.dep.fidelity << " / " << 1.0 - a.opt.fidelity << "\n";
  for (const auto& b : a.bounds)
    std::cout << "  bound " << (b.holds ? "holds " : "FAILS ") << b.name
              << "  (slack " << b.slack << ")\n";
}

void emit_decay(const fs::path& out_dir, const std::vector<rbf::LengthStats>& decay) {
  if (decay.empty()) return;
  fs::create_directories(out_dir);
  rbf::write_decay_csv((out_dir / "decay.csv").string(), decay);
  std::cout << "decay:  " << (out_dir / "decay.csv").string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis of randomized benchmarking over finite gate groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::uint64_t seed = 2024;
  std::string out_dir = "rbf-out";
  int samples = 0;
  std::vector<int> lengths;
  app.add_option("--seed", seed, "base seed for all sampling")->capture_default_str();
  app.add_option("--out-dir", out_dir, "directory for report.json / decay.csv")
      ->capture_default_str();
  app.add_option("--samples", samples,
                 "sequences per length (proctor/custom) or ensemble size (wallman)");
  app.add_option("--lengths", lengths, "sequence lengths m")->delimiter(',');

  double theta = 0.1;
  auto* proctor = app.add_subcommand("proctor", "z-detuned pi/2 pulse generators");
  proctor->add_option("--theta", theta, "z-rotation angle per pulse")->capture_default_str();

  double nu = 0.99;
  double wallman_theta = 0.09;
  auto* wallman = app.add_subcommand("wallman", "depolarizing noise with z-errors on half the gates");
  wallman->add_option("--nu", nu, "depolarizing parameter")->capture_default_str();
  wallman->add_option("--theta", wallman_theta, "z-error angle")->capture_default_str();

  std::string config_path;
  auto* custom = app.add_subcommand("custom", "analyze a gate-set from a config file");
  custom->add_option("config", config_path, "gate-set config file")->required();

  auto* leakage = app.add_subcommand("leakage", "qutrit embedding of the ideal gate-set");
  auto* selftest = app.add_subcommand("selftest", "run the built-in property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems are validation errors
  }

  try {
    if (*proctor) {
      rbf::ProctorResult r = rbf::run_proctor(theta, seed, lengths, samples);
      std::cout << "proctor scenario, theta = " << theta << "\n";
      print_analysis(r.analysis);
      if (r.fit_valid)
        std::cout << "  fitted decay rate                  : " << r.fit.p_bar
                  << " (rms residual " << r.fit.residual << ")\n";
      write_report(out_dir, rbf::to_json(r));
      emit_decay(out_dir, r.decay);
    } else if (*wallman) {
      int n_samples = samples > 0 ? samples : 500;
      rbf::WallmanResult r = rbf::run_wallman(nu, wallman_theta, n_samples, seed);
      std::cout << std::setprecision(10);
      std::cout << "wallman scenario, nu = " << nu << ", theta = " << wallman_theta << ", "
                << r.samples.size() << " samples\n";
      std::cout << "  error  computational : " << r.mean_computational << " +/- "
                << r.stdev_computational << "\n";
      std::cout << "  error  depolarizing  : " << r.mean_depolarizing << " +/- "
                << r.stdev_depolarizing << "  [" << r.min_depolarizing << ", "
                << r.max_depolarizing << "]\n";
      std::cout << "  error  optimal       : " << r.mean_optimal << " +/- " << r.stdev_optimal
                << "  [" << r.min_optimal << ", " << r.max_optimal << "]\n";
      write_report(out_dir, rbf::to_json(r));
    } else if (*leakage) {
      rbf::LeakageResult r = rbf::run_leakage();
      std::cout << "leakage scenario\n";
      std::cout << "  embedded group order    : " << r.embedded_group_order << "\n";
      std::cout << "  unit eigenvalues        : " << r.embedded_unit_eigenvalues << "\n";
      for (const auto& [name, count] : r.unit_multiplicity_per_irrep)
        std::cout << "    " << name << " block : " << count << "\n";
      std::cout << "  largest non-unit |ev|   : " << r.largest_non_unit_magnitude << "\n";
      std::cout << "  unembedded (qubit) unit eigenvalues : " << r.unembedded_unit_eigenvalues
                << "\n";
      write_report(out_dir, rbf::to_json(r));
    } else if (*custom) {
      rbf::GateSetConfig config = rbf::load_gate_set_config(config_path);
      if (seed != 2024) config.seed = seed;
      if (samples > 0) config.samples = samples;
      if (!lengths.empty()) config.lengths = lengths;
      rbf::CustomResult r = rbf::run_custom(config);
      std::cout << "custom gate-set (" << config_path << ")\n";
      print_analysis(r.analysis);
      write_report(out_dir, rbf::to_json(r));
      emit_decay(out_dir, r.decay);
    } else if (*selftest) {
      int failures = rbf::run_selftest(std::cout, seed);
      return failures == 0 ? 0 : 2;
    }
  } catch (const rbf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
