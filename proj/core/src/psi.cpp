#include "qrook/psi.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "qrook/chung_feller.hpp"
#include "qrook/kerov.hpp"

namespace qrook {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Labels of [k+1] minus the root, increasing; negative point p <-> entry p + k.
std::vector<int> non_root_labels(int k, int root) {
  std::vector<int> labels;
  for (int v = 1; v <= k + 1; ++v) {
    if (v != root) labels.push_back(v);
  }
  return labels;
}

}  // namespace

PsiTrace psi_trace(const SignedInvolution& involution) {
  const std::optional<int> k_opt = involution.membership_k();
  if (!k_opt || *k_opt != involution.negatives()) throw std::invalid_argument("psi: involution is not in I_k(n)");
  const int k = *k_opt;
  const int n = involution.half_positive();
  const int positives = 2 * n;

  PsiTrace t;
  for (int p = 1; p <= positives; ++p) {
    const int image = involution(p);
    if (image == p) {
      t.a.push_back(p);
      t.path.push_back(Step::Up());
    } else if (image < 0) {
      t.a.push_back(p);
      t.path.push_back(Step::Down(image));
    } else {
      t.h.push_back(p);
    }
  }
  t.flaws = flaws(t.path);
  t.root = t.flaws + 1;

  const TrackedPath tracked = cf_to_dyck_tracked(t.path);
  t.dyck = tracked.path;
  std::vector<int> sigma(at(positives) + 1);
  for (int p = 1; p <= positives; ++p) sigma[at(p)] = p;
  for (std::size_t j = 0; j < t.a.size(); ++j) {
    sigma[at(t.a[at(tracked.origin[j])])] = t.a[j];
  }
  for (int p : t.a) t.sigma[p] = sigma[at(p)];
  auto sig = [&](int p) { return p < 0 ? p : sigma[at(p)]; };

  t.conjugated = SignedInvolution(k, n);
  for (int p : involution.points()) t.conjugated.pair(sig(p), sig(involution(p)));

  t.tree = beta(t.dyck);
  const std::vector<int> labels = non_root_labels(k, t.root);
  t.vertex_label.push_back(t.root);
  for (const Step& step : t.dyck) {
    if (!step.up) t.vertex_label.push_back(labels[at(*step.label + k)]);
  }

  // Walk the boundary: the m-th down step opens the segment of preorder
  // vertex m; up steps are tree half-edges to the children, left to right.
  const SignedInvolution& ap = t.conjugated;
  TreeRootedMap& m = t.map;
  m.root_vertex = t.root;
  for (int v = 1; v <= k + 1; ++v) {
    m.vertices.push_back(v);
    m.rotation[v];
  }
  m.vertex_of.assign(at(positives), 0);
  m.partner.assign(at(positives), -1);
  m.in_tree.assign(at(positives), false);

  std::vector<int> down_point(at(k) + 1, 0);
  std::vector<std::vector<int>> up_points(at(k) + 1);
  int current = 0;
  int opened = 0;
  std::vector<int> run;
  for (int x = 1; x <= positives; ++x) {
    const int image = ap(x);
    const bool is_h = image > 0 && image != x;
    if (!is_h) {
      if (!run.empty()) t.h_runs.push_back(run);
      run.clear();
    }
    if (image < 0) {
      current = ++opened;
      down_point[at(current)] = x;
    } else if (image == x) {
      up_points[at(current)].push_back(x);
    } else {
      run.push_back(x);
      t.vertex_h[t.vertex_label[at(current)]].push_back(x);
      m.partner[at(x - 1)] = image - 1;
    }
    const int label = t.vertex_label[at(current)];
    m.vertex_of[at(x - 1)] = label;
    m.rotation[label].push_back(x - 1);
  }
  if (!run.empty()) t.h_runs.push_back(run);

  for (int v = 0; v < t.tree.size(); ++v) {
    const auto& kids = t.tree.children[at(v)];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const int upper = up_points[at(v)][i] - 1;
      const int lower = down_point[at(kids[i])] - 1;
      m.partner[at(upper)] = lower;
      m.partner[at(lower)] = upper;
      m.in_tree[at(upper)] = true;
      m.in_tree[at(lower)] = true;
    }
  }
  return t;
}

TreeRootedMap psi(const SignedInvolution& involution) { return psi_trace(involution).map; }

SignedInvolution psi_inv(const TreeRootedMap& map) {
  if (const auto violation = validate_map(map)) throw std::invalid_argument("psi_inv: " + *violation);
  const int k = static_cast<int>(map.vertices.size()) - 1;
  for (int v = 1; v <= k + 1; ++v) {
    if (map.vertices[at(v - 1)] != v) throw std::invalid_argument("psi_inv: vertex set must be [k+1]");
  }
  const int h = map.half_edge_count();
  const int n = h / 2;

  // Parent half-edge of every non-root vertex, found by BFS along the tree.
  std::vector<int> parent_half(at(k) + 2, -1);
  std::vector<bool> reached(at(k) + 2, false);
  std::deque<int> queue{map.root_vertex};
  reached[at(map.root_vertex)] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int e : map.rotation.at(u)) {
      if (!map.in_tree[at(e)]) continue;
      const int f = map.partner[at(e)];
      const int w = map.vertex_of[at(f)];
      if (reached[at(w)]) continue;
      reached[at(w)] = true;
      parent_half[at(w)] = f;
      queue.push_back(w);
    }
  }

  // Segment of a vertex: its rotation, starting at the parent half-edge
  // unless it is the root.
  auto segment = [&](int v) {
    std::vector<int> order = map.rotation.at(v);
    if (v != map.root_vertex) {
      std::rotate(order.begin(), std::find(order.begin(), order.end(), parent_half[at(v)]), order.end());
    }
    return order;
  };
  auto is_child_half = [&](int v, int e) {
    return map.in_tree[at(e)] && e != parent_half[at(v)];
  };

  std::vector<int> position(at(h), 0);
  int next = 0;
  std::vector<int> stack{map.root_vertex};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const std::vector<int> order = segment(v);
    std::vector<int> kids;
    for (int e : order) {
      position[at(e)] = ++next;
      if (is_child_half(v, e)) kids.push_back(map.vertex_of[at(map.partner[at(e)])]);
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  const std::vector<int> labels = non_root_labels(k, map.root_vertex);
  SignedInvolution conjugated(k, n);
  std::vector<std::pair<int, Step>> steps;  // (point, step) for tree half-edges
  for (int e = 0; e < h; ++e) {
    const int x = position[at(e)];
    const int v = map.vertex_of[at(e)];
    if (e == parent_half[at(v)]) {
      const int negative = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()) - k;
      conjugated.pair(negative, x);
      steps.emplace_back(x, Step::Down(negative));
    } else if (map.in_tree[at(e)]) {
      steps.emplace_back(x, Step::Up());
    } else {
      conjugated.pair(x, position[at(map.partner[at(e)])]);
    }
  }
  std::sort(steps.begin(), steps.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  LabeledPath dyck;
  std::vector<int> a;
  for (const auto& [x, step] : steps) {
    a.push_back(x);
    dyck.push_back(step);
  }

  const TrackedPath tracked = cf_from_dyck_tracked(dyck, map.root_vertex - 1);
  // step i of the original path is step origin[i] of the Dyck path, so
  // sigma(a_i) = a_origin[i].
  std::vector<int> sigma(at(h) + 1), sigma_inv(at(h) + 1);
  for (int p = 1; p <= h; ++p) sigma[at(p)] = sigma_inv[at(p)] = p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sigma[at(a[i])] = a[at(tracked.origin[i])];
    sigma_inv[at(a[at(tracked.origin[i])])] = a[i];
  }
  auto sig = [&](int p) { return p < 0 ? p : sigma[at(p)]; };
  auto sig_inv = [&](int p) { return p < 0 ? p : sigma_inv[at(p)]; };

  SignedInvolution out(k, n);
  for (int p : out.points()) out.pair(p, sig_inv(conjugated(sig(p))));
  return out;
}

TreeRootedMap psi_prime(const RookPlacement& placement) {
  if (!placement.is_valid()) throw std::invalid_argument("psi_prime: invalid rook placement");
  const int s = placement.board.s;
  std::vector<int> occupied;
  for (int c : placement.rook_column) {
    if (c <= s) occupied.push_back(c);
  }
  std::sort(occupied.begin(), occupied.end());
  const int k = static_cast<int>(occupied.size());
  const int removed = s - k;

  RookPlacement compressed{{k, {}}, {}};
  for (int length : placement.board.mu) compressed.board.mu.push_back(length - removed);
  for (int c : placement.rook_column) {
    compressed.rook_column.push_back(
        c <= s ? static_cast<int>(std::lower_bound(occupied.begin(), occupied.end(), c) - occupied.begin()) + 1
               : c - removed);
  }

  std::map<int, int> relabel;
  for (int j = 1; j <= k; ++j) relabel[j] = occupied[at(j - 1)];
  relabel[k + 1] = s + 1;
  return relabel_vertices(psi(kappa(compressed)), relabel);
}

RookPlacement psi_prime_inv(const TreeRootedMap& map) {
  if (map.vertices.empty()) throw std::invalid_argument("psi_prime_inv: empty vertex set");
  const int s = map.vertices.back() - 1;
  const int k = static_cast<int>(map.vertices.size()) - 1;
  if (s < 0 || (k > 0 && map.vertices.front() < 1)) {
    throw std::invalid_argument("psi_prime_inv: vertex labels must be V + {s+1} with V a subset of [s]");
  }
  std::map<int, int> relabel;
  for (int j = 1; j <= k; ++j) relabel[map.vertices[at(j - 1)]] = j;
  relabel[s + 1] = k + 1;

  const RookPlacement compressed = kappa_inv(psi_inv(relabel_vertices(map, relabel)));
  const int removed = s - k;
  RookPlacement out{{s, {}}, {}};
  for (int length : compressed.board.mu) out.board.mu.push_back(length + removed);
  for (int c : compressed.rook_column) {
    out.rook_column.push_back(c <= k ? map.vertices[at(c - 1)] : c + removed);
  }
  return out;
}

}  // namespace qrook
