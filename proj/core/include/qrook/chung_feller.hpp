#ifndef QROOK_CHUNG_FELLER_HPP
#define QROOK_CHUNG_FELLER_HPP

#include <vector>

#include "qrook/path.hpp"

namespace qrook {

// phi_j: for a path with exactly j > 0 flaws, let s_f be the first up step
// ending at level 0; the image is s_{f+1} ... s_end s_f s_1 ... s_{f-1}, a
// path with j - 1 flaws. Labels travel with their steps. Throws
// std::invalid_argument on a flaw-count mismatch or an unbalanced path.
LabeledPath cf_phi(int j, const LabeledPath& path);
// Inverse of phi_j: takes a path with j - 1 flaws to the unique path with j
// flaws that phi_j sends to it.
LabeledPath cf_phi_inv(int j, const LabeledPath& path);

// A rearranged path together with where each step came from:
// path[i] == source[origin[i]].
struct TrackedPath {
  LabeledPath path;
  std::vector<int> origin;
};

// Applies phi_j, phi_{j-1}, ..., phi_1 where j = flaws(path).
TrackedPath cf_to_dyck_tracked(const LabeledPath& path);
// Applies phi_1^{-1}, ..., phi_j^{-1} to a Dyck path.
TrackedPath cf_from_dyck_tracked(const LabeledPath& dyck, int j);

struct DyckWithFlaws {
  LabeledPath dyck;
  int flaws = 0;
};

DyckWithFlaws cf_to_dyck(const LabeledPath& path);
LabeledPath cf_from_dyck(const LabeledPath& dyck, int j);

}  // namespace qrook

#endif  // QROOK_CHUNG_FELLER_HPP
