#include "qrook/plane_tree.hpp"

#include <stdexcept>

namespace qrook {

std::vector<int> PlaneTree::preorder() const {
  std::vector<int> order;
  if (children.empty()) return order;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& kids = children[static_cast<std::size_t>(v)];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

bool PlaneTree::is_valid() const {
  const int m = size();
  if (m == 0) return false;
  if (root < 0 || root >= m) return false;
  std::vector<int> parents(static_cast<std::size_t>(m), 0);
  for (const auto& kids : children) {
    for (int c : kids) {
      if (c < 0 || c >= m || c == root) return false;
      if (++parents[static_cast<std::size_t>(c)] > 1) return false;
    }
  }
  return static_cast<int>(preorder().size()) == m;
}

PlaneTree beta(const LabeledPath& dyck) {
  if (!is_dyck(dyck)) throw std::invalid_argument("beta: input is not a Dyck path");
  PlaneTree tree;
  tree.children.emplace_back();
  // (vertex, children still to be attached)
  std::vector<std::pair<int, int>> open{{0, 0}};
  std::size_t i = 0;
  while (i < dyck.size() && dyck[i].up) {
    ++open.back().second;
    ++i;
  }
  while (i < dyck.size()) {
    while (open.back().second == 0) open.pop_back();
    const int parent = open.back().first;
    --open.back().second;
    const int v = tree.size();
    tree.children.emplace_back();
    tree.children[static_cast<std::size_t>(parent)].push_back(v);
    open.emplace_back(v, 0);
    ++i;
    while (i < dyck.size() && dyck[i].up) {
      ++open.back().second;
      ++i;
    }
  }
  return tree;
}

LabeledPath beta_inv(const PlaneTree& tree) {
  if (!tree.is_valid()) throw std::invalid_argument("beta_inv: invalid plane tree");
  LabeledPath path;
  for (int v : tree.preorder()) {
    if (v != tree.root) path.push_back(Step::Down());
    path.insert(path.end(), tree.children[static_cast<std::size_t>(v)].size(), Step::Up());
  }
  return path;
}

}  // namespace qrook
