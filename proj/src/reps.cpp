#include "rbfourier/reps.hpp"

#include <cmath>
#include <utility>

#include "rbfourier/errors.hpp"

namespace rbf {

namespace {

constexpr complexd kI{0.0, 1.0};

MatrixXcd mat2(complexd a, complexd b, complexd c, complexd d) {
  MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

double MatrixFunction::homomorphism_defect() const {
  double worst = 0.0;
  const int n = table->order;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double d = max_abs(values[table->mult[i][j]] - values[i] * values[j]);
      if (d > worst) worst = d;
    }
  return worst;
}

MatrixFunction extend_by_words(GroupTablePtr table,
                               const std::map<char, MatrixXcd>& generator_images) {
  if (generator_images.empty()) fail(ErrorCode::UnknownLabel, "no generator images");
  const Eigen::Index dim = generator_images.begin()->second.rows();
  MatrixFunction f;
  f.table = table;
  f.dim = static_cast<int>(dim);
  f.values.reserve(static_cast<size_t>(table->order));
  for (int g = 0; g < table->order; ++g) {
    MatrixXcd value = MatrixXcd::Identity(dim, dim);
    for (char label : table->words[g]) {
      auto it = generator_images.find(label);
      if (it == generator_images.end())
        fail(ErrorCode::UnknownLabel, std::string("no image for generator '") + label + "'");
      value = it->second * value;  // leftmost label applied first
    }
    f.values.push_back(std::move(value));
  }
  return f;
}

int IrrepRegistry::index_of(const std::string& name) const {
  for (size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].name == name) return static_cast<int>(i);
  fail(ErrorCode::UnknownLabel, "no irrep named " + name);
}

double IrrepRegistry::character_orthonormality_defect() const {
  const auto& classes = table->classes;
  double worst = 0.0;
  for (size_t a = 0; a < irreps.size(); ++a)
    for (size_t b = 0; b < irreps.size(); ++b) {
      complexd acc = 0.0;
      for (size_t c = 0; c < classes.size(); ++c)
        acc += static_cast<double>(classes[c].size()) * characters(a, c) *
               std::conj(characters(b, c));
      acc /= static_cast<double>(table->order);
      double d = std::abs(acc - (a == b ? 1.0 : 0.0));
      if (d > worst) worst = d;
    }
  return worst;
}

int IrrepRegistry::sum_of_squared_dims() const {
  int s = 0;
  for (const auto& irrep : irreps) s += irrep.dim() * irrep.dim();
  return s;
}

namespace {

struct IrrepSeed {
  const char* name;
  MatrixXcd x, y;
};

std::vector<IrrepSeed> irrep_seeds(BuiltinGroup which) {
  const double r3 = std::sqrt(3.0);
  const double s = 1.0 / std::sqrt(2.0);

  MatrixXcd doublet_x(2, 2), doublet_y(2, 2);
  doublet_x << -0.5, r3 / 2.0, r3 / 2.0, 0.5;
  doublet_y << -0.5, -r3 / 2.0, -r3 / 2.0, 0.5;

  MatrixXcd pauli_sign_x(3, 3), pauli_sign_y(3, 3);
  pauli_sign_x << -1, 0, 0, 0, 0, 1, 0, -1, 0;
  pauli_sign_y << 0, 0, -1, 0, -1, 0, 1, 0, 0;

  MatrixXcd pauli_x(3, 3), pauli_y(3, 3);
  pauli_x << 1, 0, 0, 0, 0, -1, 0, 1, 0;
  pauli_y << 0, 0, 1, 0, 1, 0, -1, 0, 0;

  std::vector<IrrepSeed> seeds;
  seeds.push_back({"trivial", MatrixXcd::Identity(1, 1), MatrixXcd::Identity(1, 1)});
  seeds.push_back({"sign", -MatrixXcd::Identity(1, 1), -MatrixXcd::Identity(1, 1)});
  seeds.push_back({"doublet", doublet_x, doublet_y});
  if (which == BuiltinGroup::CSU23) {
    MatrixXcd spinor_x = mat2(s, -kI * s, -kI * s, s);
    MatrixXcd spinor_y = mat2(s, -s, s, s);
    seeds.push_back({"spinor", spinor_x, spinor_y});
    seeds.push_back({"spinor_sign", -spinor_x, -spinor_y});
  }
  seeds.push_back({"pauli_sign", pauli_sign_x, pauli_sign_y});
  seeds.push_back({"pauli", pauli_x, pauli_y});
  if (which == BuiltinGroup::CSU23) {
    const double c = 1.0 / (2.0 * std::sqrt(2.0));
    MatrixXcd quartet_x(4, 4), quartet_y(4, 4);
    quartet_x << -1, r3, kI, -kI * r3,
                 r3, 1, -kI * r3, -kI,
                 kI, -kI * r3, -1, r3,
                 -kI * r3, -kI, r3, 1;
    quartet_y << -1, -r3, 1, r3,
                 -r3, 1, r3, -1,
                 -1, -r3, -1, -r3,
                 -r3, 1, -r3, 1;
    seeds.push_back({"quartet", c * quartet_x, c * quartet_y});
  }
  return seeds;
}

}  // namespace

IrrepRegistry builtin_irreps(GroupTablePtr table, BuiltinGroup which) {
  const int expected_order = which == BuiltinGroup::S4 ? 24 : 48;
  if (table->order != expected_order)
    fail(ErrorCode::TableMismatch,
         "table order " + std::to_string(table->order) + " does not match the requested group");

  IrrepRegistry registry;
  registry.table = table;
  for (const auto& seed : irrep_seeds(which)) {
    Irrep irrep;
    irrep.name = seed.name;
    irrep.rep = extend_by_words(table, {{'x', seed.x}, {'y', seed.y}});
    if (irrep.rep.homomorphism_defect() > 1e-10)
      fail(ErrorCode::TableMismatch,
           std::string("irrep ") + seed.name + " is not a homomorphism on this table");
    registry.irreps.push_back(std::move(irrep));
  }

  const auto& classes = table->classes;
  registry.characters.resize(static_cast<Eigen::Index>(registry.irreps.size()),
                             static_cast<Eigen::Index>(classes.size()));
  for (size_t a = 0; a < registry.irreps.size(); ++a)
    for (size_t c = 0; c < classes.size(); ++c)
      registry.characters(a, c) = registry.irreps[a].rep(classes[c].front()).trace();
  return registry;
}

const std::vector<std::string>& class_representative_words(BuiltinGroup which) {
  // Column order of the builtin character tables.  Representatives involve at
  // most two distinct factors, so their classes are convention-independent.
  static const std::vector<std::string> s4 = {"", "xx", "x", "xxy", "xy"};
  static const std::vector<std::string> csu23 = {"",    "xxxx", "xx", "x",
                                                 "xxx", "xxxy", "xy", "xxy"};
  return which == BuiltinGroup::S4 ? s4 : csu23;
}

double OperatorBasis::orthonormality_defect() const {
  double worst = 0.0;
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = 0; j < ops.size(); ++j) {
      complexd tr = (ops[i] * ops[j]).trace() / static_cast<double>(dim);
      double d = std::abs(tr - (i == j ? 1.0 : 0.0));
      if (d > worst) worst = d;
    }
  return worst;
}

const OperatorBasis& OperatorBasis::pauli() {
  static const OperatorBasis basis = [] {
    OperatorBasis b;
    b.dim = 2;
    b.ops = {mat2(1, 0, 0, 1), mat2(0, 1, 1, 0), mat2(0, -kI, kI, 0), mat2(1, 0, 0, -1)};
    return b;
  }();
  return basis;
}

const OperatorBasis& OperatorBasis::gell_mann() {
  static const OperatorBasis basis = [] {
    OperatorBasis b;
    b.dim = 3;
    auto m3 = [](std::initializer_list<complexd> vals) {
      MatrixXcd m(3, 3);
      int k = 0;
      for (complexd v : vals) m(k / 3, k % 3) = v, ++k;
      return m;
    };
    const double r3 = std::sqrt(3.0);
    std::vector<MatrixXcd> lambda = {
        m3({0, 1, 0, 1, 0, 0, 0, 0, 0}),
        m3({0, -kI, 0, kI, 0, 0, 0, 0, 0}),
        m3({1, 0, 0, 0, -1, 0, 0, 0, 0}),
        m3({0, 0, 1, 0, 0, 0, 1, 0, 0}),
        m3({0, 0, -kI, 0, 0, 0, kI, 0, 0}),
        m3({0, 0, 0, 0, 0, 1, 0, 1, 0}),
        m3({0, 0, 0, 0, 0, -kI, 0, kI, 0}),
        m3({1.0 / r3, 0, 0, 0, 1.0 / r3, 0, 0, 0, -2.0 / r3}),
    };
    b.ops.push_back(MatrixXcd::Identity(3, 3));
    const double scale = std::sqrt(1.5);  // Tr(A_i A_j) = 3 delta_ij
    for (const auto& l : lambda) b.ops.push_back(scale * l);
    return b;
  }();
  return basis;
}

ProcessMatrix unitary_to_process(const MatrixXcd& u, const OperatorBasis& basis) {
  if (!is_numerically_unitary(u, 1e-9))
    fail(ErrorCode::NonUnitaryInput, "input matrix is not numerically unitary");
  if (u.rows() != basis.dim)
    fail(ErrorCode::DimensionMismatch, "unitary dimension does not match the basis");
  if (basis.orthonormality_defect() > 1e-9)
    fail(ErrorCode::BadBasis, "operator basis is not orthonormal under Tr(A_i A_j)/d");
  if (max_abs(basis.ops.front() - MatrixXcd::Identity(basis.dim, basis.dim)) > 1e-9)
    fail(ErrorCode::BadBasis, "operator basis must start with the identity");

  const int n = basis.super_dim();
  ProcessMatrix p;
  p.dim = n;
  p.basis = std::make_shared<const OperatorBasis>(basis);
  p.entries.resize(n, n);
  const MatrixXcd udag = u.adjoint();
  for (int k = 0; k < n; ++k) {
    MatrixXcd conj_k = u * basis.ops[k] * udag;
    for (int j = 0; j < n; ++j) {
      complexd tr = (basis.ops[j] * conj_k).trace() / static_cast<double>(basis.dim);
      p.entries(j, k) = tr.real();
    }
  }
  return p;
}

ProcessMatrix kraus_to_process(const std::vector<MatrixXcd>& kraus, const OperatorBasis& basis) {
  if (kraus.empty() || kraus.front().rows() != basis.dim)
    fail(ErrorCode::DimensionMismatch, "Kraus operators do not match the basis dimension");
  const int n = basis.super_dim();
  ProcessMatrix p;
  p.dim = n;
  p.basis = std::make_shared<const OperatorBasis>(basis);
  p.entries.resize(n, n);
  for (int k = 0; k < n; ++k) {
    MatrixXcd image = MatrixXcd::Zero(basis.dim, basis.dim);
    for (const auto& op : kraus) image += op * basis.ops[static_cast<size_t>(k)] * op.adjoint();
    for (int j = 0; j < n; ++j) {
      complexd tr = (basis.ops[static_cast<size_t>(j)] * image).trace() /
                    static_cast<double>(basis.dim);
      p.entries(j, k) = tr.real();
    }
  }
  return p;
}

double entanglement_fidelity(const MatrixXd& a, const MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::DimensionMismatch, "process matrices differ in dimension");
  return (a * b.transpose()).trace() / static_cast<double>(a.rows());
}

double entanglement_fidelity(const ProcessMatrix& a, const ProcessMatrix& b) {
  return entanglement_fidelity(a.entries, b.entries);
}

double average_entanglement_fidelity(const MatrixFunction& phi, const MatrixFunction& eta) {
  if (phi.dim != eta.dim || phi.values.size() != eta.values.size())
    fail(ErrorCode::DimensionMismatch, "gate-sets differ in dimension or order");
  double acc = 0.0;
  for (size_t g = 0; g < phi.values.size(); ++g)
    acc += entanglement_fidelity(MatrixXd(phi.values[g].real()),
                                 MatrixXd(eta.values[g].real()));
  return acc / static_cast<double>(phi.values.size());
}

ProcessMatrix embed_qutrit(const MatrixXcd& gate) {
  if (gate.rows() != 2 || gate.cols() != 2 || !is_numerically_unitary(gate, 1e-9))
    fail(ErrorCode::NonUnitaryInput, "expected a 2x2 unitary");
  MatrixXcd v = MatrixXcd::Identity(3, 3);
  v.topLeftCorner(2, 2) = gate;
  return unitary_to_process(v, OperatorBasis::gell_mann());
}

MatrixXcd rot_x(double angle) {
  double c = std::cos(angle / 2), s = std::sin(angle / 2);
  return mat2(c, -kI * s, -kI * s, c);
}

MatrixXcd rot_y(double angle) {
  double c = std::cos(angle / 2), s = std::sin(angle / 2);
  return mat2(c, -s, s, c);
}

MatrixXcd rot_z(double angle) {
  return mat2(std::exp(-kI * (angle / 2)), 0, 0, std::exp(kI * (angle / 2)));
}

MatrixXcd clifford_gen_x() { return rot_x(M_PI / 2); }
MatrixXcd clifford_gen_y() { return rot_y(M_PI / 2); }

MatrixFunction process_function_from_unitary_generators(
    GroupTablePtr table, const std::map<char, MatrixXcd>& unitary_generators,
    const OperatorBasis& basis) {
  MatrixFunction f;
  f.table = table;
  f.dim = basis.super_dim();
  f.values.reserve(static_cast<size_t>(table->order));
  for (int g = 0; g < table->order; ++g) {
    MatrixXcd u = MatrixXcd::Identity(basis.dim, basis.dim);
    for (char label : table->words[g]) {
      auto it = unitary_generators.find(label);
      if (it == unitary_generators.end())
        fail(ErrorCode::UnknownLabel, std::string("no unitary for generator '") + label + "'");
      u = it->second * u;
    }
    f.values.push_back(unitary_to_process(u, basis).entries.cast<complexd>());
  }
  return f;
}

MatrixFunction process_function_of_elements(GroupTablePtr table, const OperatorBasis& basis) {
  MatrixFunction f;
  f.table = table;
  f.dim = basis.super_dim();
  f.values.reserve(static_cast<size_t>(table->order));
  for (int g = 0; g < table->order; ++g)
    f.values.push_back(unitary_to_process(table->elements[g], basis).entries.cast<complexd>());
  return f;
}

}  // namespace rbf
