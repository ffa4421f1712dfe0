#include <doctest.h>

#include <cmath>

#include "rbfourier/errors.hpp"
#include "rbfourier/gauge.hpp"
#include "rbfourier/scenarios.hpp"
#include "test_helpers.hpp"

using namespace rbf;

namespace {

MatrixFunction compose_with_depolarizing(double nu) {
  const auto& assets = qubit_clifford_assets();
  MatrixXcd dep = MatrixXcd::Identity(4, 4) * nu;
  dep(0, 0) = 1.0;
  MatrixFunction f;
  f.table = assets.table;
  f.dim = 4;
  for (int g = 0; g < assets.table->order; ++g) f.values.push_back(dep * assets.ideal(g));
  return f;
}

}  // namespace

TEST_SUITE("gauge") {

TEST_CASE("ideal gate-set summary: t = p = 1, q = 0, delta = 0") {
  const auto& assets = qubit_clifford_assets();
  SpectralSummary s = spectral_summary(assets.ideal_spectrum, assets.ideal_spectrum);
  CHECK(s.t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.p == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.t_bar == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.p_bar == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.q < 1e-12);
  CHECK(std::abs(s.delta) < 1e-12);
  for (const auto& bound : check_bounds(s, 1)) CHECK(bound.holds);
}

TEST_CASE("global depolarizing noise: t = 1 and p = nu exactly") {
  const auto& assets = qubit_clifford_assets();
  const double nu = 0.97;
  MatrixFunction noisy = compose_with_depolarizing(nu);
  FourierSpectrum spec = fourier_transform(noisy, assets.registry);
  SpectralSummary s = spectral_summary(spec, assets.ideal_spectrum);
  CHECK(s.t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.t_bar == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.p == doctest::Approx(nu).epsilon(1e-12));
  CHECK(s.p_bar == doctest::Approx(nu).epsilon(1e-12));
  CHECK(s.delta == doctest::Approx(0.75 * (1 - nu)).epsilon(1e-10));

  GaugeTransform dep = depolarizing_gauge(spec, assets.ideal, assets.registry);
  CHECK((dep.s - MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(dep.d_residual < 1e-12);
  GaugeTransform opt = optimal_gauge(spec, assets.ideal, assets.registry);
  CHECK((opt.s - dep.s).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("depolarizing gauge of the ideal gate-set is the identity") {
  const auto& assets = qubit_clifford_assets();
  GaugeTransform dep = depolarizing_gauge(assets.ideal_spectrum, assets.ideal, assets.registry);
  CHECK((dep.s - MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(dep.fidelity == doctest::Approx(1.0).epsilon(1e-12));
  GaugeTransform opt = optimal_gauge(assets.ideal_spectrum, assets.ideal, assets.registry);
  CHECK((opt.s - MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("depolarizing gauge postcondition holds for the detuned-pulse set") {
  const auto& assets = qubit_clifford_assets();
  MatrixFunction gs = proctor_gate_set(0.1);
  FourierSpectrum spec = fourier_transform(gs, assets.registry);
  GaugeTransform dep = depolarizing_gauge(spec, assets.ideal, assets.registry);
  CHECK(dep.d_residual <= 1e-8);
  // fidelity in this gauge equals (t_bar + 3 p_bar)/4
  CHECK(dep.fidelity ==
        doctest::Approx((dep.t_bar + 3 * dep.p_bar) / 4).epsilon(1e-12));
}

TEST_CASE("fidelity ordering: optimal >= depolarizing and computational") {
  const auto& assets = qubit_clifford_assets();
  for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
    MatrixFunction gs = random_cp_gate_set(seed);
    FourierSpectrum spec = fourier_transform(gs, assets.registry);
    double f_comp = average_entanglement_fidelity(gs, assets.ideal);
    GaugeTransform dep = depolarizing_gauge(spec, assets.ideal, assets.registry);
    GaugeTransform opt = optimal_gauge(spec, assets.ideal, assets.registry);
    CHECK(opt.fidelity >= dep.fidelity - 1e-12);
    CHECK(opt.fidelity >= f_comp - 1e-12);
  }
}

TEST_CASE("decay eigenvalues are invariant under any gauge transformation") {
  const auto& assets = qubit_clifford_assets();
  MatrixFunction gs = proctor_gate_set(0.1);
  FourierSpectrum spec = fourier_transform(gs, assets.registry);
  SpectralSummary base = spectral_summary(spec, assets.ideal_spectrum);

  SplitMix64 rng = substream(77, 1, 1);
  for (int trial = 0; trial < 3; ++trial) {
    MatrixXd s(4, 4);
    // bounded-condition random transformation
    do {
      for (int i = 0; i < 16; ++i)
        s(i / 4, i % 4) = (i / 4 == i % 4 ? 1.0 : 0.0) + 0.3 * (rng.next_double() - 0.5);
    } while (std::abs(s.determinant()) < 0.1);
    MatrixXd s_inv = s.inverse();
    MatrixFunction transformed;
    transformed.table = assets.table;
    transformed.dim = 4;
    for (int g = 0; g < assets.table->order; ++g)
      transformed.values.push_back((s_inv * gs(g).real() * s).cast<complexd>());
    FourierSpectrum tspec = fourier_transform(transformed, assets.registry);
    SpectralSummary ts = spectral_summary(tspec, assets.ideal_spectrum);
    CHECK(std::abs(ts.t_bar - base.t_bar) < 1e-10);
    CHECK(std::abs(ts.p_bar - base.p_bar) < 1e-10);
  }
}

TEST_CASE("a trace-inflating gate-set violates p <= t and is flagged") {
  const auto& assets = qubit_clifford_assets();
  MatrixFunction bad;
  bad.table = assets.table;
  bad.dim = 4;
  for (int g = 0; g < assets.table->order; ++g) {
    MatrixXcd m = assets.ideal(g);
    m.bottomRightCorner(3, 3) *= 1.2;  // not completely positive
    bad.values.push_back(m);
  }
  FourierSpectrum spec = fourier_transform(bad, assets.registry);
  SpectralSummary s = spectral_summary(spec, assets.ideal_spectrum);
  CHECK(s.p == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(s.t == doctest::Approx(1.0).epsilon(1e-12));
  bool p_le_t_failed = false;
  for (const auto& bound : check_bounds(s, 1))
    if (bound.name == "p <= t" && !bound.holds) p_le_t_failed = true;
  CHECK(p_le_t_failed);
}

TEST_CASE("bounds hold on pseudorandom CP trace-non-increasing gate-sets") {
  const auto& assets = qubit_clifford_assets();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    MatrixFunction gs = random_cp_gate_set(seed);
    FourierSpectrum spec = fourier_transform(gs, assets.registry);
    SpectralSummary s = spectral_summary(spec, assets.ideal_spectrum);
    CHECK(s.delta < 0.133);
    for (const auto& bound : check_bounds(s, 1)) CHECK(bound.holds);
  }
}

TEST_CASE("noisy spectra are rejected as ideal references") {
  const auto& assets = qubit_clifford_assets();
  FourierSpectrum noisy = fourier_transform(proctor_gate_set(0.1), assets.registry);
  try {
    spectral_summary(noisy, noisy);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdealNotRankOne);
  }
}

TEST_CASE("degenerate dominant eigenvalues fail loudly") {
  const auto& assets = qubit_clifford_assets();
  // weighting the ideal rep by the sign character empties the trivial and
  // pauli blocks, so their dominant eigenvalues are all zero
  int sign_idx = assets.registry.index_of("sign");
  MatrixFunction weighted;
  weighted.table = assets.table;
  weighted.dim = 4;
  for (int g = 0; g < assets.table->order; ++g)
    weighted.values.push_back(
        assets.registry.characters(sign_idx, assets.table->class_of(g)) * assets.ideal(g));
  FourierSpectrum spec = fourier_transform(weighted, assets.registry);
  try {
    depolarizing_gauge(spec, assets.ideal, assets.registry);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateDominantEigenvalue);
  }
}

TEST_CASE("choi check: unitaries are CP and trace preserving") {
  const auto& basis = OperatorBasis::pauli();
  ChoiReport r = choi_cp_check(unitary_to_process(clifford_gen_x(), basis));
  CHECK(r.min_eigenvalue >= -1e-12);
  CHECK(r.trace_nonincreasing);
}

TEST_CASE("choi check: depolarizing channel spectrum in closed form") {
  const double nu = 0.99;
  MatrixXd dep = nu * MatrixXd::Identity(4, 4);
  dep(0, 0) = 1.0;
  ChoiReport r = choi_cp_check(dep, OperatorBasis::pauli());
  CHECK(r.min_eigenvalue == doctest::Approx((1 - nu) / 4).epsilon(1e-10));
  CHECK(r.trace_nonincreasing);
}

TEST_CASE("choi check: trace-increasing transfer matrix is flagged") {
  MatrixXd m = MatrixXd::Identity(4, 4);
  m(0, 0) = 1.1;
  ChoiReport r = choi_cp_check(m, OperatorBasis::pauli());
  CHECK_FALSE(r.trace_nonincreasing);
}

TEST_CASE("depolarizing gauge leaves gates nearly CP with small negative parts") {
  const auto& assets = qubit_clifford_assets();
  MatrixFunction gs = proctor_gate_set(0.1);
  FourierSpectrum spec = fourier_transform(gs, assets.registry);
  GaugeTransform dep = depolarizing_gauge(spec, assets.ideal, assets.registry);
  double most_negative = 0.0;
  for (int g = 0; g < assets.table->order; ++g) {
    double mn = choi_cp_check(MatrixXd(dep.transformed(g).real()), OperatorBasis::pauli())
                    .min_eigenvalue;
    most_negative = std::min(most_negative, mn);
  }
  CHECK(most_negative < 0.0);                 // no longer exactly CP
  CHECK(std::abs(most_negative) < 1e-4);      // but on the order of 1 - F_e
  CHECK(std::abs(most_negative) > 1e-7);
}

}  // TEST_SUITE
