#ifndef RBFOURIER_GAUGE_HPP_
#define RBFOURIER_GAUGE_HPP_

#include <string>
#include <vector>

#include "rbfourier/fourier.hpp"
#include "rbfourier/matrix_utils.hpp"
#include "rbfourier/reps.hpp"

namespace rbf {

// Scalars governing RB decay and the fidelity bounds.
//
//   t, p      diagonal matrix elements of the noisy trivial/pauli blocks on
//             the ideal rank-1 eigenvectors
//   t_bar,
//   p_bar     dominant eigenvalues of those two blocks (the decay rates)
//   q         largest singular value anywhere in the spectrum after removing
//             the top singular value of each of the two dominant blocks
//   delta     1 - E_g F_e(phi, phi_ideal)
struct SpectralSummary {
  double t = 0.0;
  double p = 0.0;
  double t_bar = 0.0;
  double p_bar = 0.0;
  double t_bar_imag = 0.0;  // imaginary parts of the dominant eigenvalues,
  double p_bar_imag = 0.0;  // reported so callers can reject complex decays
  double q = 0.0;
  std::string q_irrep_name;
  int q_irrep_dim = 0;
  // largest remaining eigenvalue magnitude (the singular value q bounds it);
  // this is the "next decay rate" a long RB experiment would see
  double next_eigenvalue = 0.0;
  std::string next_eigenvalue_irrep;
  double delta = 0.0;
};

// Extracts the summary from a noisy spectrum.  The ideal spectrum supplies
// the rank-1 eigenvectors; throws IdealNotRankOne if it does not have exactly
// two non-vanishing blocks of rank 1.
SpectralSummary spectral_summary(const FourierSpectrum& spectrum,
                                 const FourierSpectrum& ideal_spectrum);

struct BoundCheck {
  std::string name;
  double lhs = 0.0;   // value that must not exceed rhs
  double rhs = 0.0;
  double slack = 0.0; // rhs - lhs
  bool holds = false;
};

// The fidelity-derived inequalities: t >= 1-delta, p >= 1 - delta*4^n/(4^n-1),
// q <= sqrt(4^n(2 delta - delta^2)/d_sigma), and p <= t <= 1.  Violations are
// reported, not thrown; they falsify the CP/trace-non-increasing hypothesis.
std::vector<BoundCheck> check_bounds(const SpectralSummary& summary, int n_qubits);

enum class GaugeKind { Depolarizing, Optimal };

struct GaugeTransform {
  MatrixXd s;                    // invertible d_phi x d_phi change of basis
  GaugeKind kind = GaugeKind::Depolarizing;
  double fidelity = 0.0;         // E_g F_e(S^{-1} phi(g) S, phi_ideal(g))
  double d_residual = 0.0;       // || E_g S^{-1} phi S phi_ideal^dag - D ||, depolarizing only
  double t_bar = 0.0;
  double p_bar = 0.0;
  MatrixFunction transformed;    // S^{-1} phi(g) S
};

// Gauge built from the dominant eigenvectors of the trivial and pauli blocks;
// in it the average error channel is diag(t_bar, p_bar, ..., p_bar).
// Eigenvector convention: ||v||^2 = d_sigma with the phase fixed so that the
// trace of the unvectorized eigenvector is real and positive, which sends the
// ideal gate-set to S = I.
GaugeTransform depolarizing_gauge(const FourierSpectrum& spectrum, const MatrixFunction& ideal,
                                  const IrrepRegistry& registry);

// Same assembly from the eigenvectors of the symmetrized blocks
// (B + B^T)/2; maximizes the average fidelity to the ideal gate-set.
GaugeTransform optimal_gauge(const FourierSpectrum& spectrum, const MatrixFunction& ideal,
                             const IrrepRegistry& registry);

struct ChoiReport {
  double min_eigenvalue = 0.0;   // of the trace-normalized Choi matrix
  bool trace_nonincreasing = false;
};

// Converts the transfer matrix to its Choi matrix (column-stacking, input
// factor first, normalized to unit trace for trace-preserving maps) and
// reports the minimum eigenvalue plus the trace condition.  The map is
// completely positive iff min_eigenvalue >= 0.
ChoiReport choi_cp_check(const ProcessMatrix& process);
ChoiReport choi_cp_check(const MatrixXd& process_entries, const OperatorBasis& basis);

}  // namespace rbf

#endif  // RBFOURIER_GAUGE_HPP_
