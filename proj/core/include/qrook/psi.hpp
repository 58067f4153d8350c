#ifndef QROOK_PSI_HPP
#define QROOK_PSI_HPP

#include <map>
#include <vector>

#include "qrook/board.hpp"
#include "qrook/involution.hpp"
#include "qrook/path.hpp"
#include "qrook/plane_tree.hpp"
#include "qrook/tree_map.hpp"

namespace qrook {

// Every intermediate object of psi, for inspection and testing.
struct PsiTrace {
  // Positive points that are fixed or matched to a negative, increasing.
  std::vector<int> a;
  // Step i is U when a[i] is fixed, otherwise D labeled by its negative partner.
  LabeledPath path;
  int flaws = 0;
  int root = 1;
  LabeledPath dyck;
  // sigma(a_i) = a_j when step i of path becomes step j of dyck; identity
  // elsewhere. Keyed by the points of a.
  std::map<int, int> sigma;
  SignedInvolution conjugated;  // sigma A sigma^-1
  PlaneTree tree;               // vertices numbered in preorder
  std::vector<int> vertex_label;  // preorder index -> label in [k+1]
  // Positive points paired with positive points.
  std::vector<int> h;
  // Maximal runs of consecutive points of h not interrupted by a point of a.
  std::vector<std::vector<int>> h_runs;
  // Points of h attached to each vertex label.
  std::map<int, std::vector<int>> vertex_h;
  TreeRootedMap map;
};

// Psi : I_k(n) -> tree-rooted maps with n edges on vertex set [k+1].
// Half-edge x - 1 of the result sits at boundary point x. Throws
// std::invalid_argument unless the involution lies in I_k(n) (s = k).
PsiTrace psi_trace(const SignedInvolution& involution);
TreeRootedMap psi(const SignedInvolution& involution);

// Inverse of psi. Accepts any valid tree-rooted map on vertex set [k+1];
// half-edge ids are irrelevant.
SignedInvolution psi_inv(const TreeRootedMap& map);

// Psi' : RC_k(n,s) -> tree-rooted maps on V + {s+1}, V the occupied
// left-block columns.
TreeRootedMap psi_prime(const RookPlacement& placement);
// Inverse of psi'. The largest vertex label is s + 1; the others must lie in
// [s].
RookPlacement psi_prime_inv(const TreeRootedMap& map);

}  // namespace qrook

#endif  // QROOK_PSI_HPP
