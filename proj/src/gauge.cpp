#include "rbfourier/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "rbfourier/errors.hpp"

namespace rbf {

namespace {

struct IdealEigvecs {
  int trivial_index = -1;
  int pauli_index = -1;
  VectorXcd psi_trivial;  // unit vectors spanning the ideal rank-1 blocks
  VectorXcd psi_pauli;
};

// Locates the two non-vanishing rank-1 blocks of the ideal spectrum and
// extracts their defining vectors.
IdealEigvecs ideal_eigvecs(const FourierSpectrum& ideal) {
  IdealEigvecs out;
  int nonzero = 0;
  for (size_t a = 0; a < ideal.blocks.size(); ++a) {
    const auto& fb = ideal.blocks[a];
    if (fb.singular_values.front() < 0.5) continue;
    ++nonzero;
    if (fb.singular_values.size() > 1 && fb.singular_values[1] > kRankTolerance)
      fail(ErrorCode::IdealNotRankOne,
           "ideal block on irrep " + fb.irrep_name + " has rank above 1");
    Eigen::JacobiSVD<MatrixXcd> svd(fb.block, Eigen::ComputeThinU);
    VectorXcd psi = svd.matrixU().col(0);
    if (fb.d_sigma == 1) {
      out.trivial_index = static_cast<int>(a);
      out.psi_trivial = psi;
    } else {
      out.pauli_index = static_cast<int>(a);
      out.psi_pauli = psi;
    }
  }
  if (nonzero != 2 || out.trivial_index < 0 || out.pauli_index < 0)
    fail(ErrorCode::IdealNotRankOne,
         "ideal spectrum does not consist of exactly two rank-1 blocks");
  return out;
}

struct DominantEig {
  complexd value;
  VectorXcd vector;
};

DominantEig dominant_eigenpair(const MatrixXcd& m, const std::string& what) {
  Eigen::ComplexEigenSolver<MatrixXcd> solver(m);
  Eigen::Index top = 0;
  for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i)
    if (std::abs(solver.eigenvalues()(i)) > std::abs(solver.eigenvalues()(top))) top = i;
  double second = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (i != top) second = std::max(second, std::abs(solver.eigenvalues()(i)));
  const double gap = std::abs(solver.eigenvalues()(top)) - second;
  if (gap < 1e-8)
    fail(ErrorCode::DegenerateDominantEigenvalue,
         what + ": dominant eigenvalue gap " + std::to_string(gap) + " below 1e-8");
  return {solver.eigenvalues()(top), solver.eigenvectors().col(top)};
}

// Unvectorizes an eigenvector into V (d_phi x d_sigma), scales to
// ||v||^2 = d_sigma and fixes the phase so the trace of V along the diagonal
// it occupies inside S (rows offset..offset+d_sigma-1) is real and positive.
// That diagonal carries the O(1) entries in the small-error regime, so the
// convention sends the ideal gate-set to S = I.
MatrixXd shape_eigenvector(const VectorXcd& v, int d_phi, int d_sigma, int offset,
                           const std::string& what) {
  VectorXcd scaled = v * (std::sqrt(static_cast<double>(d_sigma)) / v.norm());
  MatrixXcd shaped = unvec_rows(scaled, d_phi, d_sigma);
  complexd anchor = 0.0;
  for (Eigen::Index j = 0; j < d_sigma && offset + j < d_phi; ++j)
    anchor += shaped(offset + j, j);
  if (std::abs(anchor) < 1e-6 * shaped.norm()) {
    // trace near zero: anchor on the largest-magnitude aligned entry
    for (Eigen::Index j = 0; j < d_sigma && offset + j < d_phi; ++j)
      if (std::abs(shaped(offset + j, j)) > std::abs(anchor)) anchor = shaped(offset + j, j);
  }
  if (std::abs(anchor) < 1e-12)
    fail(ErrorCode::SingularGauge, what + ": eigenvector has no usable diagonal anchor");
  shaped *= std::conj(anchor) / std::abs(anchor);
  if (max_abs(shaped.imag().cast<complexd>()) > 1e-8)
    fail(ErrorCode::ComplexDominantEigenvalue,
         what + ": dominant eigenvector is not real after phase fixing");
  return shaped.real();
}

MatrixFunction reconstruct_gate_set(const FourierSpectrum& spectrum,
                                    const IrrepRegistry& registry) {
  MatrixFunction phi;
  phi.table = registry.table;
  phi.dim = spectrum.gate_set_dim;
  phi.values.reserve(static_cast<size_t>(registry.table->order));
  for (int g = 0; g < registry.table->order; ++g)
    phi.values.push_back(inverse_transform(spectrum, registry, g));
  return phi;
}

GaugeTransform build_gauge(const FourierSpectrum& spectrum, const MatrixFunction& ideal,
                           const IrrepRegistry& registry, GaugeKind kind) {
  FourierSpectrum ideal_spectrum = fourier_transform(ideal, registry);
  IdealEigvecs ideal_vs = ideal_eigvecs(ideal_spectrum);
  const int d_phi = spectrum.gate_set_dim;
  const auto& trivial_block = spectrum.blocks[static_cast<size_t>(ideal_vs.trivial_index)];
  const auto& pauli_block = spectrum.blocks[static_cast<size_t>(ideal_vs.pauli_index)];
  if (1 + pauli_block.d_sigma != d_phi)
    fail(ErrorCode::SingularGauge, "block dimensions cannot assemble a square gauge");

  auto pick = [kind](const MatrixXcd& b) {
    return kind == GaugeKind::Depolarizing ? b : MatrixXcd((b + b.transpose()) / 2.0);
  };
  DominantEig top_t = dominant_eigenpair(pick(trivial_block.block), "trivial block");
  DominantEig top_p = dominant_eigenpair(pick(pauli_block.block), "pauli block");
  for (const auto* e : {&top_t, &top_p})
    if (std::abs(e->value.imag()) > 1e-10)
      fail(ErrorCode::ComplexDominantEigenvalue,
           "dominant eigenvalue has imaginary part " + std::to_string(e->value.imag()));

  GaugeTransform gauge;
  gauge.kind = kind;
  gauge.t_bar = top_t.value.real();
  gauge.p_bar = top_p.value.real();
  MatrixXd v_t =
      shape_eigenvector(top_t.vector, d_phi, trivial_block.d_sigma, 0, "trivial block");
  MatrixXd v_p = shape_eigenvector(top_p.vector, d_phi, pauli_block.d_sigma,
                                   trivial_block.d_sigma, "pauli block");
  gauge.s.resize(d_phi, d_phi);
  gauge.s.leftCols(1) = v_t;
  gauge.s.rightCols(d_phi - 1) = v_p;

  Eigen::JacobiSVD<MatrixXd> svd(gauge.s);
  if (svd.singularValues().minCoeff() <= 1e-8)
    fail(ErrorCode::SingularGauge, "assembled gauge matrix is numerically singular");

  MatrixFunction phi = reconstruct_gate_set(spectrum, registry);
  MatrixXd s_inv = gauge.s.inverse();
  gauge.transformed.table = registry.table;
  gauge.transformed.dim = d_phi;
  MatrixXd avg_error = MatrixXd::Zero(d_phi, d_phi);
  double fidelity = 0.0;
  for (int g = 0; g < registry.table->order; ++g) {
    MatrixXd phi_g = phi(g).real();
    MatrixXd ideal_g = ideal(g).real();
    MatrixXd transformed = s_inv * phi_g * gauge.s;
    avg_error += transformed * ideal_g.transpose();
    fidelity += entanglement_fidelity(transformed, ideal_g);
    gauge.transformed.values.push_back(transformed.cast<complexd>());
  }
  avg_error /= static_cast<double>(registry.table->order);
  gauge.fidelity = fidelity / static_cast<double>(registry.table->order);

  if (kind == GaugeKind::Depolarizing) {
    MatrixXd d_matrix = gauge.p_bar * MatrixXd::Identity(d_phi, d_phi);
    d_matrix(0, 0) = gauge.t_bar;
    gauge.d_residual = (avg_error - d_matrix).cwiseAbs().maxCoeff();
  }
  return gauge;
}

}  // namespace

SpectralSummary spectral_summary(const FourierSpectrum& spectrum,
                                 const FourierSpectrum& ideal_spectrum) {
  IdealEigvecs ideal_vs = ideal_eigvecs(ideal_spectrum);
  const auto& trivial_block = spectrum.blocks[static_cast<size_t>(ideal_vs.trivial_index)];
  const auto& pauli_block = spectrum.blocks[static_cast<size_t>(ideal_vs.pauli_index)];

  SpectralSummary s;
  s.t = std::real(complexd(ideal_vs.psi_trivial.dot(trivial_block.block * ideal_vs.psi_trivial)));
  s.p = std::real(complexd(ideal_vs.psi_pauli.dot(pauli_block.block * ideal_vs.psi_pauli)));
  s.t_bar = trivial_block.eigenvalues.front().real();
  s.t_bar_imag = trivial_block.eigenvalues.front().imag();
  s.p_bar = pauli_block.eigenvalues.front().real();
  s.p_bar_imag = pauli_block.eigenvalues.front().imag();

  s.q = 0.0;
  s.next_eigenvalue = 0.0;
  for (size_t a = 0; a < spectrum.blocks.size(); ++a) {
    const auto& fb = spectrum.blocks[a];
    size_t skip_top = (static_cast<int>(a) == ideal_vs.trivial_index ||
                       static_cast<int>(a) == ideal_vs.pauli_index)
                          ? 1
                          : 0;
    for (size_t k = skip_top; k < fb.singular_values.size(); ++k)
      if (fb.singular_values[k] > s.q) {
        s.q = fb.singular_values[k];
        s.q_irrep_name = fb.irrep_name;
        s.q_irrep_dim = fb.d_sigma;
      }
    for (size_t k = skip_top; k < fb.eigenvalues.size(); ++k)
      if (std::abs(fb.eigenvalues[k]) > s.next_eigenvalue) {
        s.next_eigenvalue = std::abs(fb.eigenvalues[k]);
        s.next_eigenvalue_irrep = fb.irrep_name;
      }
  }

  // delta from Parseval's identity: E_g F_e = sum_sigma (d_sigma/d_phi)
  // Tr(block * ideal_block^dag); the rank-1 ideal blocks reduce this to the
  // two quadratic forms.
  const int d_phi = spectrum.gate_set_dim;
  complexd fid = 0.0;
  for (size_t a = 0; a < spectrum.blocks.size(); ++a)
    fid += (static_cast<double>(spectrum.blocks[a].d_sigma) / d_phi) *
           (spectrum.blocks[a].block * ideal_spectrum.blocks[a].block.adjoint()).trace();
  s.delta = 1.0 - fid.real();
  return s;
}

std::vector<BoundCheck> check_bounds(const SpectralSummary& summary, int n_qubits) {
  const double dim = std::pow(4.0, n_qubits);
  const double delta = std::max(summary.delta, 0.0);
  std::vector<BoundCheck> checks;
  auto push = [&checks](std::string name, double lhs, double rhs) {
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    c.holds = c.slack >= -1e-12;
    checks.push_back(c);
  };
  push("t >= 1 - delta", 1.0 - delta, summary.t);
  push("p >= 1 - delta * 4^n/(4^n - 1)", 1.0 - delta * dim / (dim - 1.0), summary.p);
  const double d_sigma = summary.q_irrep_dim > 0 ? summary.q_irrep_dim : 1.0;
  push("q <= sqrt(4^n (2 delta - delta^2) / d_sigma)", summary.q,
       std::sqrt(std::max(dim * (2.0 * delta - delta * delta), 0.0) / d_sigma));
  push("p <= t", summary.p, summary.t);
  push("t <= 1", summary.t, 1.0);
  return checks;
}

GaugeTransform depolarizing_gauge(const FourierSpectrum& spectrum, const MatrixFunction& ideal,
                                  const IrrepRegistry& registry) {
  return build_gauge(spectrum, ideal, registry, GaugeKind::Depolarizing);
}

GaugeTransform optimal_gauge(const FourierSpectrum& spectrum, const MatrixFunction& ideal,
                             const IrrepRegistry& registry) {
  return build_gauge(spectrum, ideal, registry, GaugeKind::Optimal);
}

ChoiReport choi_cp_check(const MatrixXd& process_entries, const OperatorBasis& basis) {
  const int d = basis.dim;
  const int n = basis.super_dim();
  if (process_entries.rows() != n || process_entries.cols() != n)
    fail(ErrorCode::DimensionMismatch, "process matrix does not match the basis");

  // images of the basis operators under the channel
  std::vector<MatrixXcd> image(static_cast<size_t>(n), MatrixXcd::Zero(d, d));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      image[static_cast<size_t>(k)] += process_entries(j, k) * basis.ops[static_cast<size_t>(j)];

  MatrixXcd choi = MatrixXcd::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      MatrixXcd out = MatrixXcd::Zero(d, d);
      for (int k = 0; k < n; ++k)
        out += (basis.ops[static_cast<size_t>(k)](b, a) / static_cast<double>(d)) *
               image[static_cast<size_t>(k)];
      choi.block(a * d, b * d, d, d) = out;  // E_ab (x) Lambda(E_ab)
    }
  choi /= static_cast<double>(d);  // unit trace for trace-preserving maps

  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig((choi + choi.adjoint()) / 2.0);

  MatrixXcd heisenberg_identity = MatrixXcd::Zero(d, d);
  for (int k = 0; k < n; ++k)
    heisenberg_identity += process_entries(0, k) * basis.ops[static_cast<size_t>(k)];
  Eigen::SelfAdjointEigenSolver<MatrixXcd> dual(
      (heisenberg_identity + heisenberg_identity.adjoint()) / 2.0);

  ChoiReport report;
  report.min_eigenvalue = eig.eigenvalues().minCoeff();
  report.trace_nonincreasing = dual.eigenvalues().maxCoeff() <= 1.0 + 1e-10;
  return report;
}

ChoiReport choi_cp_check(const ProcessMatrix& process) {
  return choi_cp_check(process.entries, *process.basis);
}

}  // namespace rbf
