#ifndef RBFOURIER_FOURIER_HPP_
#define RBFOURIER_FOURIER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "rbfourier/matrix_utils.hpp"
#include "rbfourier/reps.hpp"

namespace rbf {

// Singular values below this count as zero when ranking Fourier blocks.
inline constexpr double kRankTolerance = 1e-8;

// One Fourier component: block = E_g phi(g) (x) conj(sigma(g)) for a single
// irrep sigma, together with its spectral data.
struct FourierBlock {
  int irrep_index = 0;
  std::string irrep_name;
  int d_phi = 0;
  int d_sigma = 0;
  MatrixXcd block;                        // (d_phi*d_sigma)^2 entries
  std::vector<complexd> eigenvalues;      // descending |lambda|
  std::vector<double> singular_values;    // descending

  int dim() const { return d_phi * d_sigma; }
  int rank(double tol = kRankTolerance) const;
};

struct FourierSpectrum {
  int gate_set_dim = 0;  // d_phi
  std::vector<FourierBlock> blocks;  // one per registry irrep, registry order

  const FourierBlock& block_named(const std::string& name) const;
};

// The matrix-valued Fourier transform of phi on every irrep of the registry.
// The expectation is the exact uniform average over all group elements.
FourierSpectrum fourier_transform(const MatrixFunction& phi, const IrrepRegistry& registry);

// phi(g) = sum_sigma d_sigma Tr_sigma[(I (x) conj(sigma(g^{-1}))) block(sigma)].
MatrixXcd inverse_transform(const FourierSpectrum& spectrum, const IrrepRegistry& registry,
                            int g);

// Group convolution (phi * eta)(g) = E_h phi(g h^{-1}) eta(h).
MatrixFunction convolve(const MatrixFunction& phi, const MatrixFunction& eta);

// Max over irreps of || (phi*eta)~(sigma) - phi~(sigma) eta~(sigma) ||.
double convolve_check(const MatrixFunction& phi, const MatrixFunction& eta,
                      const IrrepRegistry& registry);

// Both sides of E_g Tr(phi(g) eta(g)^dag) = sum_sigma d_sigma Tr(phi~ eta~^dag).
std::pair<complexd, complexd> parseval_check(const MatrixFunction& phi,
                                             const MatrixFunction& eta,
                                             const IrrepRegistry& registry);

// Both sides of E_g ||phi(g)||_HS^2 = sum_sigma d_sigma ||phi~(sigma)||_HS^2.
std::pair<double, double> parseval_norm_check(const MatrixFunction& phi,
                                              const IrrepRegistry& registry);

// Tr over the irrep factor, a d_phi x d_phi matrix.  For an irreducible
// representation input equivalent to the block's irrep this is I / d_phi.
MatrixXcd partial_trace_block(const FourierBlock& block);

}  // namespace rbf

#endif  // RBFOURIER_FOURIER_HPP_
