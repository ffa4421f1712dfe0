#include "rbfourier/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>

#include "rbfourier/errors.hpp"

namespace rbf {

namespace {

long long grid_round(double x) {
  long long v = std::llround(x / kCanonicalGrid);
  return v == 0 ? 0 : v;  // normalizes -0
}

struct KeyHash {
  size_t operator()(const CanonicalKey& k) const {
    size_t h = 1469598103934665603ull;
    for (long long v : k) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool within_tolerance(const MatrixXcd& a, const MatrixXcd& b) {
  return max_abs(a - b) < kClosureTolerance;
}

}  // namespace

CanonicalKey canonical_key(const MatrixXcd& m) {
  CanonicalKey key;
  key.reserve(static_cast<size_t>(2 * m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      key.push_back(grid_round(m(i, j).real()));
      key.push_back(grid_round(m(i, j).imag()));
    }
  return key;
}

int GroupTable::element_of_word(std::string_view word) const {
  int g = identity_index;
  for (char label : word) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      fail(ErrorCode::UnknownLabel, std::string("no generator labeled '") + label + "'");
    int gen_element = generator_elements[static_cast<size_t>(it - labels.begin())];
    g = mult[static_cast<size_t>(gen_element)][static_cast<size_t>(g)];
  }
  return g;
}

bool GroupTable::verify_axioms() const {
  const int n = order;
  for (int i = 0; i < n; ++i) {
    if (mult[i][identity_index] != i || mult[identity_index][i] != i) return false;
    if (mult[i][inv[i]] != identity_index || mult[inv[i]][i] != identity_index) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (mult[mult[i][j]][k] != mult[i][mult[j][k]]) return false;
  return true;
}

GroupTable close_group(const std::vector<std::pair<char, MatrixXcd>>& generators,
                       int max_order) {
  if (generators.empty())
    fail(ErrorCode::NonUnitaryGenerator, "no generators supplied");
  const Eigen::Index dim = generators.front().second.rows();
  for (const auto& [label, g] : generators) {
    if (g.rows() != dim || g.cols() != dim)
      fail(ErrorCode::NonUnitaryGenerator,
           std::string("generator '") + label + "' is not square of matching dimension");
    if (!is_numerically_unitary(g, 1e-9))
      fail(ErrorCode::NonUnitaryGenerator,
           std::string("generator '") + label + "' is not numerically unitary");
  }

  GroupTable table;
  std::vector<std::pair<char, MatrixXcd>> gens = generators;
  std::sort(gens.begin(), gens.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [label, g] : gens) table.labels.push_back(label);

  std::unordered_map<CanonicalKey, int, KeyHash> index_of_key;
  auto find_element = [&](const MatrixXcd& m) -> int {
    auto it = index_of_key.find(canonical_key(m));
    if (it != index_of_key.end()) return it->second;
    // grid miss: scan with the true tolerance
    for (size_t i = 0; i < table.elements.size(); ++i)
      if (within_tolerance(table.elements[i], m)) return static_cast<int>(i);
    return -1;
  };
  auto add_element = [&](const MatrixXcd& m, std::string word) -> int {
    int idx = static_cast<int>(table.elements.size());
    table.elements.push_back(m);
    table.words.push_back(std::move(word));
    index_of_key.emplace(canonical_key(m), idx);
    return idx;
  };

  add_element(MatrixXcd::Identity(dim, dim), "");
  // BFS; words grow on the right (label applied after the existing word),
  // so discovery order is shortlex with the lexicographic tie-break.
  for (size_t head = 0; head < table.elements.size(); ++head) {
    for (const auto& [label, g] : gens) {
      MatrixXcd next = g * table.elements[head];
      if (find_element(next) >= 0) continue;
      if (static_cast<int>(table.elements.size()) >= max_order)
        fail(ErrorCode::ClosureOverflow,
             "closure exceeds max_order = " + std::to_string(max_order));
      add_element(next, table.words[head] + label);
    }
  }

  const int n = static_cast<int>(table.elements.size());
  table.order = n;
  table.identity_index = 0;
  for (const auto& [label, g] : gens) table.generator_elements.push_back(find_element(g));
  table.mult.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = find_element(table.elements[i] * table.elements[j]);
      if (k < 0)
        fail(ErrorCode::ClosureOverflow, "product fell outside the closed set");
      table.mult[i][j] = k;
    }
  table.inv.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table.mult[i][j] == 0) {
        table.inv[i] = j;
        break;
      }

  table.classes = conjugacy_classes(table);
  table.class_index.assign(n, -1);
  for (size_t c = 0; c < table.classes.size(); ++c)
    for (int e : table.classes[c]) table.class_index[e] = static_cast<int>(c);
  return table;
}

std::vector<std::vector<int>> conjugacy_classes(const GroupTable& table) {
  const int n = table.order;
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int g = 0; g < n; ++g) {
      int conj = table.mult[table.mult[g][i]][table.inv[g]];
      if (!seen[conj]) {
        seen[conj] = true;
        orbit.push_back(conj);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return classes;
}

}  // namespace rbf
