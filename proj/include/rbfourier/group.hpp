#ifndef RBFOURIER_GROUP_HPP_
#define RBFOURIER_GROUP_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbfourier/matrix_utils.hpp"

namespace rbf {

// Entrywise tolerance for identifying two matrices as the same group element.
inline constexpr double kClosureTolerance = 1e-9;
// Grid used to build hashable fingerprints of matrix entries.
inline constexpr double kCanonicalGrid = 1e-6;

// Fingerprint of a matrix with entries rounded to the canonical grid.
// Matrices that agree to kClosureTolerance share a key for all groups built
// here (entries of interest sit far from grid-cell boundaries); lookups that
// miss the key fall back to a tolerance scan, so dedup never depends on the
// grid alone.
using CanonicalKey = std::vector<long long>;

CanonicalKey canonical_key(const MatrixXcd& m);

// A finite matrix group materialized as index tables.
//
// Element 0 is the identity; elements are numbered in BFS discovery order
// from the identity, which coincides with shortlex order of their canonical
// words.  Words are over single-character generator labels, leftmost label
// applied first: the word "xy" denotes the operator product G_y * G_x.
struct GroupTable {
  int order = 0;
  int identity_index = 0;
  std::vector<char> labels;                 // generator labels, sorted
  std::vector<int> generator_elements;      // element index of each generator
  std::vector<MatrixXcd> elements;          // canonical matrix per element
  std::vector<std::vector<int>> mult;       // mult[i][j] = index of g_i * g_j
  std::vector<int> inv;                     // inv[i] = index of g_i^{-1}
  std::vector<std::string> words;           // shortest word per element
  std::vector<std::vector<int>> classes;    // conjugacy classes, sorted by (size, min index)
  std::vector<int> class_index;             // element -> index into classes

  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements.front().rows()); }
  int class_of(int element) const { return class_index.at(static_cast<size_t>(element)); }
  int element_of_word(std::string_view word) const;

  // Exhaustive group-axiom verification (identity, inverses, associativity).
  // Intended for tests; cost is order^3 lookups.
  bool verify_axioms() const;
};

// Closes the generators under multiplication (BFS from the identity).
// Generators must be square, equally sized and numerically unitary.
// Throws ClosureOverflow if the closure exceeds max_order.
GroupTable close_group(const std::vector<std::pair<char, MatrixXcd>>& generators,
                       int max_order);

// Conjugation-closed partition of element indices, sorted by
// (class size, smallest member index).  Already stored on the table;
// exposed for direct use and for cross-checks.
std::vector<std::vector<int>> conjugacy_classes(const GroupTable& table);

using GroupTablePtr = std::shared_ptr<const GroupTable>;

}  // namespace rbf

#endif  // RBFOURIER_GROUP_HPP_
