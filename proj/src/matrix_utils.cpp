#include "rbfourier/matrix_utils.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rbfourier/errors.hpp"

namespace rbf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::NonUnitaryGenerator: return "NonUnitaryGenerator";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NonUnitaryInput: return "NonUnitaryInput";
    case ErrorCode::BadBasis: return "BadBasis";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorCode::IdealNotRankOne: return "IdealNotRankOne";
    case ErrorCode::DegenerateDominantEigenvalue: return "DegenerateDominantEigenvalue";
    case ErrorCode::ComplexDominantEigenvalue: return "ComplexDominantEigenvalue";
    case ErrorCode::SingularGauge: return "SingularGauge";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::FitDiverged: return "FitDiverged";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Error";
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

VectorXcd vec_rows(const MatrixXcd& v) {
  VectorXcd out(v.rows() * v.cols());
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j)
      out(i * v.cols() + j) = v(i, j);
  return out;
}

MatrixXcd unvec_rows(const VectorXcd& v, Eigen::Index rows, Eigen::Index cols) {
  MatrixXcd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      out(i, j) = v(i * cols + j);
  return out;
}

MatrixXcd partial_trace_second(const MatrixXcd& m, Eigen::Index d1, Eigen::Index d2) {
  MatrixXcd out = MatrixXcd::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index k = 0; k < d1; ++k)
      for (Eigen::Index j = 0; j < d2; ++j)
        out(i, k) += m(i * d2 + j, k * d2 + j);
  return out;
}

double hs_norm_sq(const MatrixXcd& m) { return m.squaredNorm(); }

double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<complexd> sorted_eigenvalues(const MatrixXcd& m) {
  Eigen::ComplexEigenSolver<MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  std::vector<complexd> eig(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(eig.begin(), eig.end(), [](const complexd& a, const complexd& b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return eig;
}

std::vector<double> singular_values_desc(const MatrixXcd& m) {
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  std::vector<double> sv(svd.singularValues().data(),
                         svd.singularValues().data() + svd.singularValues().size());
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

bool is_numerically_unitary(const MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  MatrixXcd g = m.adjoint() * m - MatrixXcd::Identity(m.rows(), m.cols());
  return max_abs(g) <= tol;
}

}  // namespace rbf
