#include "rbfourier/fourier.hpp"

#include <algorithm>

#include "rbfourier/errors.hpp"

namespace rbf {

int FourierBlock::rank(double tol) const {
  return static_cast<int>(
      std::count_if(singular_values.begin(), singular_values.end(),
                    [tol](double s) { return s > tol; }));
}

const FourierBlock& FourierSpectrum::block_named(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.irrep_name == name) return b;
  fail(ErrorCode::IncompleteSpectrum, "spectrum has no block for irrep " + name);
}

FourierSpectrum fourier_transform(const MatrixFunction& phi, const IrrepRegistry& registry) {
  if (phi.table != registry.table)
    fail(ErrorCode::TableMismatch, "gate-set and registry use different group tables");
  const int order = phi.table->order;

  FourierSpectrum spectrum;
  spectrum.gate_set_dim = phi.dim;
  for (size_t a = 0; a < registry.irreps.size(); ++a) {
    const auto& sigma = registry.irreps[a].rep;
    FourierBlock fb;
    fb.irrep_index = static_cast<int>(a);
    fb.irrep_name = registry.irreps[a].name;
    fb.d_phi = phi.dim;
    fb.d_sigma = sigma.dim;
    fb.block = MatrixXcd::Zero(fb.dim(), fb.dim());
    for (int g = 0; g < order; ++g)
      fb.block += kron(phi(g), sigma(g).conjugate());
    fb.block /= static_cast<double>(order);
    fb.eigenvalues = sorted_eigenvalues(fb.block);
    fb.singular_values = singular_values_desc(fb.block);
    spectrum.blocks.push_back(std::move(fb));
  }
  return spectrum;
}

MatrixXcd inverse_transform(const FourierSpectrum& spectrum, const IrrepRegistry& registry,
                            int g) {
  if (spectrum.blocks.size() != registry.irreps.size())
    fail(ErrorCode::IncompleteSpectrum, "spectrum does not cover every irrep of the registry");
  const int d_phi = spectrum.gate_set_dim;
  const int g_inv = registry.table->inv[static_cast<size_t>(g)];

  MatrixXcd out = MatrixXcd::Zero(d_phi, d_phi);
  for (size_t a = 0; a < spectrum.blocks.size(); ++a) {
    const auto& fb = spectrum.blocks[a];
    const auto& sigma = registry.irreps[a].rep;
    if (fb.d_sigma != sigma.dim)
      fail(ErrorCode::IncompleteSpectrum, "block dimensions do not match the registry");
    MatrixXcd weighted =
        kron(MatrixXcd::Identity(d_phi, d_phi), sigma(g_inv).conjugate()) * fb.block;
    out += static_cast<double>(sigma.dim) * partial_trace_second(weighted, d_phi, sigma.dim);
  }
  return out;
}

MatrixFunction convolve(const MatrixFunction& phi, const MatrixFunction& eta) {
  if (phi.table != eta.table || phi.dim != eta.dim)
    fail(ErrorCode::TableMismatch, "convolution operands live on different tables/dimensions");
  const auto& table = *phi.table;
  MatrixFunction out;
  out.table = phi.table;
  out.dim = phi.dim;
  out.values.assign(static_cast<size_t>(table.order), MatrixXcd::Zero(phi.dim, phi.dim));
  for (int g = 0; g < table.order; ++g) {
    MatrixXcd acc = MatrixXcd::Zero(phi.dim, phi.dim);
    for (int h = 0; h < table.order; ++h)
      acc += phi(table.mult[g][table.inv[h]]) * eta(h);
    out.values[static_cast<size_t>(g)] = acc / static_cast<double>(table.order);
  }
  return out;
}

double convolve_check(const MatrixFunction& phi, const MatrixFunction& eta,
                      const IrrepRegistry& registry) {
  FourierSpectrum lhs = fourier_transform(convolve(phi, eta), registry);
  FourierSpectrum fphi = fourier_transform(phi, registry);
  FourierSpectrum feta = fourier_transform(eta, registry);
  double worst = 0.0;
  for (size_t a = 0; a < lhs.blocks.size(); ++a) {
    double d = max_abs(lhs.blocks[a].block - fphi.blocks[a].block * feta.blocks[a].block);
    if (d > worst) worst = d;
  }
  return worst;
}

std::pair<complexd, complexd> parseval_check(const MatrixFunction& phi,
                                             const MatrixFunction& eta,
                                             const IrrepRegistry& registry) {
  const int order = phi.table->order;
  complexd lhs = 0.0;
  for (int g = 0; g < order; ++g) lhs += (phi(g) * eta(g).adjoint()).trace();
  lhs /= static_cast<double>(order);

  FourierSpectrum fphi = fourier_transform(phi, registry);
  FourierSpectrum feta = fourier_transform(eta, registry);
  complexd rhs = 0.0;
  for (size_t a = 0; a < fphi.blocks.size(); ++a)
    rhs += static_cast<double>(fphi.blocks[a].d_sigma) *
           (fphi.blocks[a].block * feta.blocks[a].block.adjoint()).trace();
  return {lhs, rhs};
}

std::pair<double, double> parseval_norm_check(const MatrixFunction& phi,
                                              const IrrepRegistry& registry) {
  const int order = phi.table->order;
  double lhs = 0.0;
  for (int g = 0; g < order; ++g) lhs += hs_norm_sq(phi(g));
  lhs /= static_cast<double>(order);

  FourierSpectrum fphi = fourier_transform(phi, registry);
  double rhs = 0.0;
  for (const auto& fb : fphi.blocks)
    rhs += static_cast<double>(fb.d_sigma) * hs_norm_sq(fb.block);
  return {lhs, rhs};
}

MatrixXcd partial_trace_block(const FourierBlock& block) {
  return partial_trace_second(block.block, block.d_phi, block.d_sigma);
}

}  // namespace rbf
