#ifndef RBFOURIER_REPS_HPP_
#define RBFOURIER_REPS_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rbfourier/group.hpp"
#include "rbfourier/matrix_utils.hpp"

namespace rbf {

// A matrix-valued function on a finite group: one dim x dim matrix per
// element of the table.  Both representations and (noisy) gate-sets are
// instances of this type.
struct MatrixFunction {
  GroupTablePtr table;
  int dim = 0;
  std::vector<MatrixXcd> values;

  const MatrixXcd& operator()(int g) const { return values.at(static_cast<size_t>(g)); }

  // Largest deviation max_{i,j} ||f(i*j) - f(i) f(j)|| over all pairs.
  double homomorphism_defect() const;
  bool is_representation(double tol = 1e-10) const { return homomorphism_defect() <= tol; }
};

// Extends generator images along each element's canonical word.  The word
// convention (leftmost applied first) makes value(g) = img(l_k)...img(l_1)
// for word l_1...l_k, mirroring how the table itself multiplies.
MatrixFunction extend_by_words(GroupTablePtr table,
                               const std::map<char, MatrixXcd>& generator_images);

struct Irrep {
  std::string name;
  MatrixFunction rep;
  int dim() const { return rep.dim; }
};

struct IrrepRegistry {
  GroupTablePtr table;
  std::vector<Irrep> irreps;
  // characters(a, c): character of irrep a on class c, classes in table order.
  MatrixXcd characters;

  int index_of(const std::string& name) const;
  // max_{a,b} |E_g chi_a(g) conj(chi_b(g)) - delta_ab|
  double character_orthonormality_defect() const;
  int sum_of_squared_dims() const;
};

enum class BuiltinGroup { S4, CSU23 };

// Irreps of the 24- and 48-element single-qubit Clifford matrix groups,
// extended from fixed generator images over the table's words and verified
// to be homomorphisms.  Irrep names: trivial, sign, doublet, (spinor,
// spinor_sign,) pauli_sign, pauli, (quartet).
IrrepRegistry builtin_irreps(GroupTablePtr table, BuiltinGroup which);

// Class-representative words matching the builtin character-table columns.
// Representatives use at most two distinct factors, so their classes do not
// depend on the word-reading convention.
const std::vector<std::string>& class_representative_words(BuiltinGroup which);

// Hermitian operator basis, normalized so Tr(A_i A_j) = d * delta_ij with
// A_0 the identity.  Transfer matrices of unitaries are then orthogonal.
struct OperatorBasis {
  int dim = 0;                   // Hilbert-space dimension d
  std::vector<MatrixXcd> ops;    // d*d operators

  int super_dim() const { return dim * dim; }
  double orthonormality_defect() const;

  static const OperatorBasis& pauli();      // qubit: I, X, Y, Z
  static const OperatorBasis& gell_mann();  // qutrit: I, sqrt(3/2) * the eight Gell-Mann matrices
};

// Real transfer matrix of a quantum channel in an OperatorBasis
// (entries[j][k] = Tr(A_j Phi(A_k)) / d).
struct ProcessMatrix {
  int dim = 0;  // d_phi = d * d
  MatrixXd entries;
  std::shared_ptr<const OperatorBasis> basis;
};

// Transfer matrix of conjugation by a unitary: entries[j][k] = Tr(A_j U A_k U^dag)/d.
ProcessMatrix unitary_to_process(const MatrixXcd& u, const OperatorBasis& basis);

// Transfer matrix of a Kraus channel rho -> sum_i K_i rho K_i^dag.
ProcessMatrix kraus_to_process(const std::vector<MatrixXcd>& kraus, const OperatorBasis& basis);

// Tr(a b^T) / d_phi.  Equals 1 iff the two channels are the same unitary.
double entanglement_fidelity(const ProcessMatrix& a, const ProcessMatrix& b);
double entanglement_fidelity(const MatrixXd& a, const MatrixXd& b);

// Mean fidelity of two gate-sets, E_g F_e(phi(g), eta(g)).
double average_entanglement_fidelity(const MatrixFunction& phi, const MatrixFunction& eta);

// Embeds a qubit gate into a qutrit acting trivially on the third level
// (gate -> gate ⊕ 1) and returns the 9x9 transfer matrix in the Gell-Mann
// basis.
ProcessMatrix embed_qutrit(const MatrixXcd& gate);

// Common unitaries.
MatrixXcd rot_x(double angle);  // exp(-i angle sigma_x / 2)
MatrixXcd rot_y(double angle);
MatrixXcd rot_z(double angle);

// The pi/2 generators of the single-qubit Clifford group.
MatrixXcd clifford_gen_x();
MatrixXcd clifford_gen_y();

// Gate-set helpers: transfer matrices as a MatrixFunction on a table.
//
// process_function_from_unitary_generators composes the supplied unitaries
// along each element's word and converts once to a transfer matrix, so the
// result is exactly multiplicative when the inputs are.
MatrixFunction process_function_from_unitary_generators(
    GroupTablePtr table, const std::map<char, MatrixXcd>& unitary_generators,
    const OperatorBasis& basis);

// Transfer matrices of the table's own canonical element matrices.
MatrixFunction process_function_of_elements(GroupTablePtr table, const OperatorBasis& basis);

}  // namespace rbf

#endif  // RBFOURIER_REPS_HPP_
