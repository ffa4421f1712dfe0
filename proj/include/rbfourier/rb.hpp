#ifndef RBFOURIER_RB_HPP_
#define RBFOURIER_RB_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "rbfourier/fourier.hpp"
#include "rbfourier/reps.hpp"

namespace rbf {

// A randomized-benchmarking experiment: a noisy gate-set over a group table,
// state/measurement vectors in the operator basis, and sampling parameters.
// rho must describe a positive unit-trace operator and meas an effect with
// eigenvalues in [0, 1], or survival values lose their meaning.
struct RbConfig {
  MatrixFunction gate_set;        // noisy transfer matrices phi(g)
  MatrixFunction ideal;           // ideal transfer matrices
  VectorXd rho;                   // |rho>:  rho_j = Tr(A_j rho) / d
  VectorXd meas;                  // <M|:    m_j = Tr(A_j M)
  std::vector<int> lengths;
  int sequences_per_length = 100;
  std::uint64_t seed = 0;
};

// |0><0| prepared/measured on a qubit, in the Pauli basis.
VectorXd ground_state_vector();
VectorXd ground_state_effect();

// Exact sequence average at length m (m-1 uniform gates plus the inverting
// gate): <M| Phi_m(e) |rho> with Phi_m recovered from the m-th powers of the
// Fourier blocks.  Equals the mean over all |G|^{m-1} sequences.
double rb_exact(const RbConfig& config, const IrrepRegistry& registry, int m);

struct LengthStats {
  int m = 0;
  double mean = 0.0;
  double stderr_mean = 0.0;
  double exact = 0.0;
};

// Seeded Monte Carlo over random sequences; bit-reproducible for a fixed
// seed.  Each (length, sequence) pair draws from its own derived substream.
std::vector<LengthStats> rb_monte_carlo(const RbConfig& config, const IrrepRegistry& registry);

enum class FitMode { Single, Double };

struct DecayModel {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;        // zero in single mode
  double p_bar = 0.0;
  double t_bar = 1.0;    // fit only in double mode
  double residual = 0.0; // RMS
  bool p_identifiable = true;
};

// Separable least squares for S_m = A + B p^m (+ C t^m): scan the rate(s)
// over (0, 1.05] on a 1e-4 grid, solve the linear coefficients at each grid
// point, then refine by golden section.  Double mode alternates 1-D scans.
DecayModel fit_decay(const std::vector<std::pair<int, double>>& data, FitMode mode);

}  // namespace rbf

#endif  // RBFOURIER_RB_HPP_
