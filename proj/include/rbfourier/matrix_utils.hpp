#ifndef RBFOURIER_MATRIX_UTILS_HPP_
#define RBFOURIER_MATRIX_UTILS_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace rbf {

using complexd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b);

// Row-major vectorization: vec(V)[i * cols + j] = V(i, j).  With this
// convention (A (x) B) vec(V) = vec(A V B^T), so the Kronecker form
// phi(g) (x) conj(sigma(g)) acts on vec(V) as phi(g) V sigma(g)^dagger.
VectorXcd vec_rows(const MatrixXcd& v);
MatrixXcd unvec_rows(const VectorXcd& v, Eigen::Index rows, Eigen::Index cols);

// Partial trace over the second tensor factor of a (d1*d2) x (d1*d2) matrix.
MatrixXcd partial_trace_second(const MatrixXcd& m, Eigen::Index d1, Eigen::Index d2);

double hs_norm_sq(const MatrixXcd& m);
double max_abs(const MatrixXcd& m);

// Eigenvalues sorted by descending magnitude; ties by descending real part,
// then descending imaginary part, so conjugate pairs order deterministically.
std::vector<complexd> sorted_eigenvalues(const MatrixXcd& m);

std::vector<double> singular_values_desc(const MatrixXcd& m);

bool is_numerically_unitary(const MatrixXcd& m, double tol);

}  // namespace rbf

#endif  // RBFOURIER_MATRIX_UTILS_HPP_
