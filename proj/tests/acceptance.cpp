// Acceptance suite: one self-contained check per release criterion, each
// printed as a single pass/fail line with its runtime.  Exits non-zero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "rbfourier/fourier.hpp"
#include "rbfourier/gauge.hpp"
#include "rbfourier/rb.hpp"
#include "rbfourier/report_io.hpp"
#include "rbfourier/rng.hpp"
#include "rbfourier/scenarios.hpp"
#include "test_helpers.hpp"

using namespace rbf;

namespace {

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = unbounded
  std::function<bool(std::string&)> run;
};

bool close_rel(double value, double reference, double rel, std::string& why,
               const std::string& label) {
  double err = std::abs(value - reference) / std::abs(reference);
  if (err <= rel) return true;
  why += label + " off by " + std::to_string(err * 100) + "% ";
  return false;
}

// reference 4x4 gauge matrices for the detuned-pulse example at theta = 0.1
MatrixXd reference_s_dep() {
  MatrixXd s(4, 4);
  s << 1, 0, 0, 0,
       0, 0.997701, -0.0516457, -0.0439113,
       0, 0.0492626, 0.997353, -0.0533756,
       0, 0.0465462, 0.0510903, 0.997612;
  return s;
}

MatrixXd reference_s_opt() {
  MatrixXd s(4, 4);
  s << 1, 0, 0, 0,
       0, 0.9976, -0.0509382, -0.0469065,
       0, 0.0484868, 0.997477, -0.0518515,
       0, 0.0494286, 0.0494542, 0.997552;
  return s;
}

// compare after flipping each column of `have` to the sign that best matches
double max_entry_error_with_column_signs(const MatrixXd& have, const MatrixXd& want) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < have.cols(); ++j) {
    double direct = (have.col(j) - want.col(j)).cwiseAbs().maxCoeff();
    double flipped = (have.col(j) + want.col(j)).cwiseAbs().maxCoeff();
    worst = std::max(worst, std::min(direct, flipped));
  }
  return worst;
}

bool criterion_group_structure(std::string& why) {
  GroupTable unitary = close_group(
      {{'x', clifford_gen_x()}, {'y', clifford_gen_y()}}, 64);
  bool ok = unitary.order == 48 && unitary.classes.size() == 8;

  const auto& assets = qubit_clifford_assets();
  ok = ok && assets.table->order == 24 && assets.table->classes.size() == 5;

  MatrixXcd px(3, 3), py(3, 3);
  px << 1, 0, 0, 0, 0, -1, 0, 1, 0;
  py << 0, 0, 1, 0, 1, 0, -1, 0, 0;
  GroupTable pauli_rep = close_group({{'x', px}, {'y', py}}, 64);
  ok = ok && pauli_rep.order == 24 && pauli_rep.classes.size() == 5;

  IrrepRegistry reg24 = assets.registry;
  auto table48 = std::make_shared<const GroupTable>(std::move(unitary));
  IrrepRegistry reg48 = builtin_irreps(table48, BuiltinGroup::CSU23);
  ok = ok && reg24.sum_of_squared_dims() == 24 && reg48.sum_of_squared_dims() == 48;
  if (!ok) why = "order/class/dimension mismatch";
  return ok;
}

bool criterion_character_tables(std::string& why) {
  // reference rows keyed to the class representatives e, x^4, x^2, x, x^3,
  // x^3y, xy, x^2y (48-element group) and e, x^2, x, x^2y, xy (24-element)
  const double r2 = std::sqrt(2.0);
  const std::vector<std::vector<double>> table48 = {
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, -1, -1, 1, 1, -1},
      {2, 2, 2, 0, 0, -1, -1, 0},
      {2, -2, 0, r2, -r2, -1, 1, 0},
      {2, -2, 0, -r2, r2, -1, 1, 0},
      {3, 3, -1, -1, -1, 0, 0, 1},
      {3, 3, -1, 1, 1, 0, 0, -1},
      {4, -4, 0, 0, 0, 1, -1, 0}};
  const std::vector<std::vector<double>> table24 = {{1, 1, 1, 1, 1},
                                                    {1, 1, -1, -1, 1},
                                                    {2, 2, 0, 0, -1},
                                                    {3, -1, -1, 1, 0},
                                                    {3, -1, 1, -1, 0}};

  const auto& assets = qubit_clifford_assets();
  MatrixXcd ex = MatrixXcd::Identity(3, 3);
  ex.topLeftCorner(2, 2) = clifford_gen_x();
  MatrixXcd ey = MatrixXcd::Identity(3, 3);
  ey.topLeftCorner(2, 2) = clifford_gen_y();
  auto t48 = std::make_shared<const GroupTable>(close_group({{'x', ex}, {'y', ey}}, 128));
  IrrepRegistry reg48 = builtin_irreps(t48, BuiltinGroup::CSU23);

  bool ok = true;
  auto check_table = [&](const GroupTable& table, const IrrepRegistry& reg,
                         BuiltinGroup which, const std::vector<std::vector<double>>& want) {
    const auto& words = class_representative_words(which);
    for (size_t a = 0; a < reg.irreps.size(); ++a)
      for (size_t c = 0; c < words.size(); ++c) {
        int cls = table.class_of(table.element_of_word(words[c]));
        complexd have = reg.characters(static_cast<Eigen::Index>(a), cls);
        if (std::abs(have - want[a][c]) > 1e-10) {
          ok = false;
          why += reg.irreps[a].name + "@" + (words[c].empty() ? "e" : words[c]) + " ";
        }
      }
  };
  check_table(*assets.table, assets.registry, BuiltinGroup::S4, table24);
  check_table(*t48, reg48, BuiltinGroup::CSU23, table48);
  return ok;
}

bool criterion_fourier_identities(std::string& why) {
  const auto& assets = qubit_clifford_assets();
  double worst_parseval = 0.0, worst_conv = 0.0, worst_inverse = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    MatrixFunction phi =
        rbf_test::random_matrix_function(assets.table, 4, 9000 + 2 * trial);
    MatrixFunction eta =
        rbf_test::random_matrix_function(assets.table, 4, 9001 + 2 * trial);
    auto [n_lhs, n_rhs] = parseval_norm_check(phi, assets.registry);
    worst_parseval = std::max(worst_parseval, std::abs(n_lhs - n_rhs));
    auto [lhs, rhs] = parseval_check(phi, eta, assets.registry);
    worst_parseval = std::max(worst_parseval, std::abs(lhs - rhs));
    worst_conv = std::max(worst_conv, convolve_check(phi, eta, assets.registry));
    FourierSpectrum spec = fourier_transform(phi, assets.registry);
    for (int g = 0; g < assets.table->order; g += 5)
      worst_inverse = std::max(
          worst_inverse, max_abs(inverse_transform(spec, assets.registry, g) - phi(g)));
  }
  bool ok = worst_parseval <= 1e-10 && worst_conv <= 1e-10 && worst_inverse <= 1e-10;
  if (!ok)
    why = "parseval " + std::to_string(worst_parseval) + ", conv " +
          std::to_string(worst_conv) + ", inverse " + std::to_string(worst_inverse);
  return ok;
}

bool criterion_ideal_structure(std::string& why) {
  const auto& assets = qubit_clifford_assets();
  bool ok = true;
  for (const auto& block : assets.ideal_spectrum.blocks) {
    if (block.irrep_name == "trivial" || block.irrep_name == "pauli") {
      if (block.singular_values[1] > 1e-10 || std::abs(block.singular_values[0] - 1) > 1e-10) {
        ok = false;
        why += block.irrep_name + " not rank-1 ";
      }
    } else if (max_abs(block.block) > 1e-12) {
      ok = false;
      why += block.irrep_name + " not zero ";
    }
  }
  // partial-trace identity: the d_sigma-weighted partial traces reassemble
  // phi(e) = I, i.e. their normalized sum is I/4; the pauli block alone
  // carries (I - |I><I|)/3
  MatrixXcd sum = MatrixXcd::Zero(4, 4);
  for (const auto& block : assets.ideal_spectrum.blocks)
    sum += static_cast<double>(block.d_sigma) * partial_trace_block(block);
  if (max_abs(sum / 4.0 - MatrixXcd::Identity(4, 4) / 4.0) > 1e-10) {
    ok = false;
    why += "partial-trace sum != I/4 ";
  }
  MatrixXcd pauli_pt = partial_trace_block(assets.ideal_spectrum.block_named("pauli"));
  MatrixXcd want = MatrixXcd::Identity(4, 4) / 3.0;
  want(0, 0) = 0.0;
  if (max_abs(pauli_pt - want) > 1e-10) {
    ok = false;
    why += "pauli partial trace ";
  }
  return ok;
}

bool criterion_proctor(std::string& why) {
  ProctorResult r = run_proctor(0.1, 1, {1, 2}, 5);
  const auto& s = r.analysis.summary;
  bool ok = true;
  ok &= close_rel(s.delta, 3.70e-3, 0.02, why, "delta");
  ok &= close_rel(1 - s.p_bar, 2.94e-5, 0.02, why, "1-p_bar");
  ok &= close_rel(1 - r.analysis.dep.fidelity, 2.20e-5, 0.02, why, "dep error");
  ok &= close_rel(1 - r.analysis.opt.fidelity, 1.62e-5, 0.02, why, "opt error");
  ok &= close_rel(s.next_eigenvalue, 1.88e-3, 0.02, why, "next eigenvalue");
  double dep_err = max_entry_error_with_column_signs(r.analysis.dep.s, reference_s_dep());
  double opt_err = max_entry_error_with_column_signs(r.analysis.opt.s, reference_s_opt());
  if (dep_err > 1e-4) {
    ok = false;
    why += "S_dep entries off by " + std::to_string(dep_err) + " ";
  }
  if (opt_err > 1e-4) {
    ok = false;
    why += "S_opt entries off by " + std::to_string(opt_err) + " ";
  }
  return ok;
}

bool criterion_wallman(std::string& why) {
  const double nu = 0.99, theta = 0.09;
  WallmanResult r = run_wallman(nu, theta, 500, 2024);
  const double err_closed =
      1.0 - ((1 + 3 * nu) / 4.0 + (1 + nu + 2 * nu * std::cos(theta)) / 4.0) / 2.0;
  bool ok = true;
  if (std::abs(err_closed - 8.50e-3) > 5e-6) {
    ok = false;
    why += "closed form does not round to 8.50e-3 ";
  }
  double var = r.stdev_computational * r.stdev_computational;
  if (var > 1e-12) {
    ok = false;
    why += "computational variance " + std::to_string(var) + " ";
  }
  for (const auto& sample : r.samples) {
    if (std::abs(sample.err_computational - err_closed) > 1e-12) {
      ok = false;
      why += "sample deviates from closed form ";
      break;
    }
  }
  if (r.mean_depolarizing < 8.0e-3 || r.mean_depolarizing > 9.0e-3) {
    ok = false;
    why += "dep mean " + std::to_string(r.mean_depolarizing) + " ";
  }
  for (const auto& sample : r.samples) {
    if (sample.err_optimal > sample.err_depolarizing + 1e-12 ||
        sample.err_optimal > sample.err_computational + 1e-12) {
      ok = false;
      why += "optimal gauge lost on a sample ";
      break;
    }
  }
  return ok;
}

bool criterion_leakage(std::string& why) {
  LeakageResult r = run_leakage();
  bool ok = r.embedded_unit_eigenvalues == 5 && r.largest_non_unit_magnitude <= 1e-9;
  if (!ok)
    why = std::to_string(r.embedded_unit_eigenvalues) + " unit eigenvalues, largest rest " +
          std::to_string(r.largest_non_unit_magnitude);
  return ok;
}

bool criterion_rb_oracle(std::string& why) {
  const auto& assets = qubit_clifford_assets();
  bool ok = true;

  auto check_exact = [&](const MatrixFunction& gs, const std::string& label) {
    RbConfig config;
    config.gate_set = gs;
    config.ideal = assets.ideal;
    config.rho = ground_state_vector();
    config.meas = ground_state_effect();
    for (int m : {2, 3}) {
      double exact = rb_exact(config, assets.registry, m);
      double brute = rbf_test::rb_brute_force(config, m);
      if (std::abs(exact - brute) > 1e-12) {
        ok = false;
        why += label + " m=" + std::to_string(m) + " ";
      }
    }
  };
  check_exact(proctor_gate_set(0.1), "detuned");
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    check_exact(random_cp_gate_set(3000 + seed), "random" + std::to_string(seed));

  RbConfig config;
  config.gate_set = proctor_gate_set(0.1);
  config.ideal = assets.ideal;
  config.rho = ground_state_vector();
  config.meas = ground_state_effect();
  config.lengths = {1, 2, 4, 8, 16, 32};
  config.sequences_per_length = 10000;
  config.seed = 321;
  for (const auto& ls : rb_monte_carlo(config, assets.registry))
    if (std::abs(ls.mean - ls.exact) > 3.0 * ls.stderr_mean + 1e-12) {
      ok = false;
      why += "MC m=" + std::to_string(ls.m) + " outside 3 SE ";
    }
  return ok;
}

bool criterion_bounds(std::string& why) {
  const auto& assets = qubit_clifford_assets();
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    MatrixFunction gs = random_cp_gate_set(40000 + seed);
    FourierSpectrum spec = fourier_transform(gs, assets.registry);
    SpectralSummary s = spectral_summary(spec, assets.ideal_spectrum);
    if (s.delta >= 0.133) ++violations;
    for (const auto& bound : check_bounds(s, 1))
      if (!bound.holds) ++violations;
  }
  if (violations > 0) why = std::to_string(violations) + " violations";
  return violations == 0;
}

bool criterion_gauge_invariance(std::string& why) {
  const auto& assets = qubit_clifford_assets();
  MatrixFunction gs = proctor_gate_set(0.1);
  FourierSpectrum spec = fourier_transform(gs, assets.registry);
  SpectralSummary base = spectral_summary(spec, assets.ideal_spectrum);

  SplitMix64 rng = substream(555, 0, 0);
  bool ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    // random orthogonal factors around a bounded diagonal: condition <= 4
    MatrixXd a(4, 4), b(4, 4);
    for (int i = 0; i < 16; ++i) {
      a(i / 4, i % 4) = rng.next_double() - 0.5;
      b(i / 4, i % 4) = rng.next_double() - 0.5;
    }
    MatrixXd q1 = Eigen::HouseholderQR<MatrixXd>(a).householderQ();
    MatrixXd q2 = Eigen::HouseholderQR<MatrixXd>(b).householderQ();
    VectorXd diag(4);
    for (int i = 0; i < 4; ++i) diag(i) = 0.5 + 1.5 * rng.next_double();
    MatrixXd s_mat = q1 * diag.asDiagonal() * q2;
    MatrixXd s_inv = s_mat.inverse();

    MatrixFunction transformed;
    transformed.table = assets.table;
    transformed.dim = 4;
    for (int g = 0; g < assets.table->order; ++g)
      transformed.values.push_back((s_inv * gs(g).real() * s_mat).cast<complexd>());
    FourierSpectrum tspec = fourier_transform(transformed, assets.registry);
    SpectralSummary ts = spectral_summary(tspec, assets.ideal_spectrum);
    if (std::abs(ts.t_bar - base.t_bar) > 1e-10 || std::abs(ts.p_bar - base.p_bar) > 1e-10) {
      ok = false;
      why += "trial " + std::to_string(trial) + " ";
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "group structure (orders, classes, irrep dimensions)", 1.0, criterion_group_structure},
      {2, "character tables match entrywise to 1e-10", 0.0, criterion_character_tables},
      {3, "Fourier identities on 50 random matrix functions", 5.0, criterion_fourier_identities},
      {4, "ideal gate-set: two rank-1 blocks and partial-trace identity", 0.0,
       criterion_ideal_structure},
      {5, "detuned-pulse example matches reference values", 10.0, criterion_proctor},
      {6, "depolarizing + z-error ensemble (500 samples)", 60.0, criterion_wallman},
      {7, "leakage embedding has exactly five unit eigenvalues", 0.0, criterion_leakage},
      {8, "exact RB equals enumeration; Monte Carlo within 3 SE", 0.0, criterion_rb_oracle},
      {9, "fidelity bounds hold on 500 random CP gate-sets", 0.0, criterion_bounds},
      {10, "decay eigenvalues invariant under 20 random gauges", 0.0,
       criterion_gauge_invariance},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criterion.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_s > 0 && elapsed > criterion.time_limit_s) {
      ok = false;
      why += "took " + std::to_string(elapsed) + "s (limit " +
             std::to_string(criterion.time_limit_s) + "s)";
    }
    if (!ok) ++failures;
    std::printf("[%2d] %s  %-55s (%.2f s)%s%s\n", criterion.id, ok ? "PASS" : "FAIL",
                criterion.name.c_str(), elapsed, why.empty() ? "" : "  -- ", why.c_str());
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
