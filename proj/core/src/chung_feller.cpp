#include "qrook/chung_feller.hpp"

#include <stdexcept>
#include <string>

namespace qrook {

namespace {

// Index of the first up step that ends at level 0, or -1.
int first_up_to_zero(const LabeledPath& path) {
  int level = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    level += path[i].up ? 1 : -1;
    if (path[i].up && level == 0) return static_cast<int>(i);
  }
  return -1;
}

// result[i] = path[order[i]] for the phi rearrangement around index f.
std::vector<int> phi_order(std::size_t length, int f) {
  std::vector<int> order;
  order.reserve(length);
  for (std::size_t i = static_cast<std::size_t>(f) + 1; i < length; ++i) order.push_back(static_cast<int>(i));
  order.push_back(f);
  for (int i = 0; i < f; ++i) order.push_back(i);
  return order;
}

template <class T>
std::vector<T> permute(const std::vector<T>& items, const std::vector<int>& order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (int i : order) out.push_back(items[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<int> phi_step(const LabeledPath& path, int j) {
  if (!is_balanced(path)) throw std::invalid_argument("phi: path is not balanced");
  if (j <= 0 || flaws(path) != j) {
    throw std::invalid_argument("phi_" + std::to_string(j) + ": path has " + std::to_string(flaws(path)) + " flaws");
  }
  return phi_order(path.size(), first_up_to_zero(path));
}

// Order realizing phi_j^{-1}. The image Q = X s_f Y of P = Y s_f X determines
// P once the position of s_f in Q is known; exactly one up step of Q gives a
// preimage that phi_j maps back to Q.
std::vector<int> phi_inverse_step(const LabeledPath& path, int j) {
  if (!is_balanced(path)) throw std::invalid_argument("phi inverse: path is not balanced");
  if (j <= 0 || flaws(path) != j - 1) {
    throw std::invalid_argument("phi_" + std::to_string(j) + " inverse: path has " +
                                std::to_string(flaws(path)) + " flaws");
  }
  const int length = static_cast<int>(path.size());
  for (int p = 0; p < length; ++p) {
    if (!path[static_cast<std::size_t>(p)].up) continue;
    std::vector<int> order;
    for (int i = p + 1; i < length; ++i) order.push_back(i);
    order.push_back(p);
    for (int i = 0; i < p; ++i) order.push_back(i);
    const LabeledPath candidate = permute(path, order);
    if (flaws(candidate) == j && first_up_to_zero(candidate) == length - 1 - p) return order;
  }
  throw std::logic_error("phi inverse: no preimage found");
}

}  // namespace

LabeledPath cf_phi(int j, const LabeledPath& path) { return permute(path, phi_step(path, j)); }

LabeledPath cf_phi_inv(int j, const LabeledPath& path) { return permute(path, phi_inverse_step(path, j)); }

TrackedPath cf_to_dyck_tracked(const LabeledPath& path) {
  if (!is_balanced(path)) throw std::invalid_argument("cf_to_dyck: path is not balanced");
  TrackedPath out{path, {}};
  for (int i = 0; i < static_cast<int>(path.size()); ++i) out.origin.push_back(i);
  for (int j = flaws(path); j > 0; --j) {
    const std::vector<int> order = phi_step(out.path, j);
    out.path = permute(out.path, order);
    out.origin = permute(out.origin, order);
  }
  return out;
}

TrackedPath cf_from_dyck_tracked(const LabeledPath& dyck, int j) {
  if (!is_dyck(dyck)) throw std::invalid_argument("cf_from_dyck: input is not a Dyck path");
  if (j < 0 || 2 * j > static_cast<int>(dyck.size())) {
    throw std::invalid_argument("cf_from_dyck: flaw count out of range");
  }
  TrackedPath out{dyck, {}};
  for (int i = 0; i < static_cast<int>(dyck.size()); ++i) out.origin.push_back(i);
  for (int i = 1; i <= j; ++i) {
    const std::vector<int> order = phi_inverse_step(out.path, i);
    out.path = permute(out.path, order);
    out.origin = permute(out.origin, order);
  }
  return out;
}

DyckWithFlaws cf_to_dyck(const LabeledPath& path) {
  const int j = is_balanced(path) ? flaws(path) : 0;
  return {cf_to_dyck_tracked(path).path, j};
}

LabeledPath cf_from_dyck(const LabeledPath& dyck, int j) { return cf_from_dyck_tracked(dyck, j).path; }

}  // namespace qrook
