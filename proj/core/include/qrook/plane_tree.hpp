#ifndef QROOK_PLANE_TREE_HPP
#define QROOK_PLANE_TREE_HPP

#include <vector>

#include "qrook/path.hpp"

namespace qrook {

// Rooted plane tree on vertices 0..size-1; children[v] is left to right.
struct PlaneTree {
  int root = 0;
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(children.size()); }
  // Vertices in preorder (parent before children, subtrees left to right).
  std::vector<int> preorder() const;
  bool is_valid() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

// Decodes a Dyck path. The leading up-run gives the root's child count;
// every later down step opens the next vertex in preorder and the up-run
// after it gives that vertex's child count. Vertices are numbered 0..k in
// preorder, so the i-th down step belongs to vertex i. Throws
// std::invalid_argument on non-Dyck input.
PlaneTree beta(const LabeledPath& dyck);

// Inverse of beta (unlabeled path). Any vertex numbering is accepted.
LabeledPath beta_inv(const PlaneTree& tree);

}  // namespace qrook

#endif  // QROOK_PLANE_TREE_HPP
