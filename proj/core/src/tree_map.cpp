#include "qrook/tree_map.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "disjoint_sets.hpp"
#include "qrook/involution.hpp"

namespace qrook {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::optional<std::string> validate_map(const TreeRootedMap& map) {
  const int h = map.half_edge_count();
  if (h % 2 != 0) return "odd number of half-edges";
  if (static_cast<int>(map.vertex_of.size()) != h || static_cast<int>(map.in_tree.size()) != h) {
    return "half-edge arrays have inconsistent sizes";
  }
  if (map.vertices.empty()) return "empty vertex set";
  if (!std::is_sorted(map.vertices.begin(), map.vertices.end()) ||
      std::adjacent_find(map.vertices.begin(), map.vertices.end()) != map.vertices.end()) {
    return "vertex labels must be sorted and distinct";
  }
  auto is_vertex = [&](int v) { return std::binary_search(map.vertices.begin(), map.vertices.end(), v); };
  if (!is_vertex(map.root_vertex)) return "root vertex is not a vertex";

  for (int e = 0; e < h; ++e) {
    const int p = map.partner[at(e)];
    if (p < 0 || p >= h || p == e || map.partner[at(p)] != e) {
      return "edge pairing is not a fixed-point-free involution";
    }
    if (!is_vertex(map.vertex_of[at(e)])) return "half-edge attached to an unknown vertex";
    if (map.in_tree[at(e)] != map.in_tree[at(p)]) return "tree membership differs between the halves of an edge";
  }

  std::vector<int> seen(at(h), 0);
  for (const auto& [v, order] : map.rotation) {
    if (!is_vertex(v)) return "rotation given for an unknown vertex";
    for (int e : order) {
      if (e < 0 || e >= h) return "rotation mentions an unknown half-edge";
      if (map.vertex_of[at(e)] != v) return "rotation disagrees with vertex_of";
      ++seen[at(e)];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    return "rotation system does not list every half-edge exactly once";
  }

  const std::size_t nv = map.vertices.size();
  auto vindex = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(map.vertices.begin(), map.vertices.end(), v) -
                                    map.vertices.begin());
  };

  detail::DisjointSets graph(nv);
  for (int e = 0; e < h; ++e) graph.unite(vindex(map.vertex_of[at(e)]), vindex(map.vertex_of[at(map.partner[at(e)])]));
  if (graph.classes() != 1) return "underlying graph is not connected";

  int tree_edges = 0;
  detail::DisjointSets tree(nv);
  for (int e = 0; e < h; ++e) {
    const int p = map.partner[at(e)];
    if (!map.in_tree[at(e)] || p < e) continue;
    ++tree_edges;
    if (!tree.unite(vindex(map.vertex_of[at(e)]), vindex(map.vertex_of[at(p)]))) return "tree contains a cycle";
  }
  if (tree_edges != static_cast<int>(nv) - 1 || tree.classes() != 1) return "tree not spanning";
  return std::nullopt;
}

int count_faces(const TreeRootedMap& map) {
  const int h = map.half_edge_count();
  std::vector<int> successor(at(h), -1);
  for (const auto& [v, order] : map.rotation) {
    for (std::size_t i = 0; i < order.size(); ++i) successor[at(order[i])] = order[(i + 1) % order.size()];
  }
  std::vector<bool> visited(at(h), false);
  int faces = 0;
  for (int start = 0; start < h; ++start) {
    if (visited[at(start)]) continue;
    ++faces;
    for (int e = start; !visited[at(e)]; e = successor[at(map.partner[at(e)])]) visited[at(e)] = true;
  }
  return faces;
}

void normalize_rotations(TreeRootedMap& map) {
  for (auto& [v, order] : map.rotation) {
    if (v == map.root_vertex || order.empty()) continue;
    std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
  }
}

TreeRootedMap canonical_form(const TreeRootedMap& map) {
  const int h = map.half_edge_count();
  std::vector<int> new_id(at(h), -1);
  std::vector<int> old_of;  // new id -> old id
  old_of.reserve(at(h));
  std::set<int> visited_vertices;

  auto visit = [&](int v, int entry) {
    visited_vertices.insert(v);
    const auto it = map.rotation.find(v);
    if (it == map.rotation.end()) return;
    const auto& order = it->second;
    std::size_t start = 0;
    if (entry >= 0) start = static_cast<std::size_t>(std::find(order.begin(), order.end(), entry) - order.begin());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int e = order[(start + i) % order.size()];
      new_id[at(e)] = static_cast<int>(old_of.size());
      old_of.push_back(e);
    }
  };

  visit(map.root_vertex, -1);
  for (std::size_t next = 0; next < old_of.size(); ++next) {
    const int p = map.partner[at(old_of[next])];
    if (!visited_vertices.count(map.vertex_of[at(p)])) visit(map.vertex_of[at(p)], p);
  }
  if (static_cast<int>(old_of.size()) != h || visited_vertices.size() != map.vertices.size()) {
    throw std::invalid_argument("canonical_form: map is not connected");
  }

  TreeRootedMap out;
  out.root_vertex = map.root_vertex;
  out.vertices = map.vertices;
  out.vertex_of.resize(at(h));
  out.partner.resize(at(h));
  out.in_tree.resize(at(h));
  for (int e = 0; e < h; ++e) {
    const int old = old_of[at(e)];
    out.vertex_of[at(e)] = map.vertex_of[at(old)];
    out.partner[at(e)] = new_id[at(map.partner[at(old)])];
    out.in_tree[at(e)] = map.in_tree[at(old)];
  }
  for (int v : map.vertices) out.rotation[v];
  for (int e = 0; e < h; ++e) out.rotation[out.vertex_of[at(e)]].push_back(e);
  return out;
}

TreeRootedMap relabel_vertices(const TreeRootedMap& map, const std::map<int, int>& relabel) {
  auto lookup = [&](int v) {
    const auto it = relabel.find(v);
    if (it == relabel.end()) throw std::invalid_argument("relabel_vertices: missing label");
    return it->second;
  };
  TreeRootedMap out = map;
  out.root_vertex = lookup(map.root_vertex);
  out.vertices.clear();
  for (int v : map.vertices) out.vertices.push_back(lookup(v));
  std::sort(out.vertices.begin(), out.vertices.end());
  for (auto& v : out.vertex_of) v = lookup(v);
  out.rotation.clear();
  for (const auto& [v, order] : map.rotation) out.rotation[lookup(v)] = order;
  return out;
}

bool canonical_less(const TreeRootedMap& a, const TreeRootedMap& b) {
  auto key = [](const TreeRootedMap& m) {
    return std::tie(m.root_vertex, m.vertices, m.vertex_of, m.partner, m.in_tree);
  };
  // Rotation is implied by vertex_of for canonical forms.
  return key(a) < key(b);
}

std::vector<TreeRootedMap> enumerate_tree_rooted_maps(int n_edges, int n_vertices) {
  if (n_edges < 0 || n_vertices < 1) throw std::invalid_argument("enumerate_tree_rooted_maps: bad size");
  std::vector<TreeRootedMap> found;
  if (n_vertices - 1 > n_edges) return found;
  const int h = 2 * n_edges;

  std::set<TreeRootedMap, decltype(&canonical_less)> unique(&canonical_less);
  std::vector<int> degree(at(n_vertices), 0);

  // Half-edges are laid out in label order, vertex v owning one contiguous
  // block; the rotation inside each block is the identity order. Every
  // rotation system arises this way up to renaming half-edges, which the
  // matching enumeration and canonical_form absorb.
  auto emit_for_degrees = [&]() {
    std::vector<int> owner;
    for (int v = 1; v <= n_vertices; ++v) owner.insert(owner.end(), at(degree[at(v - 1)]), v);
    for_each_matching(h, [&](const PerfectMatching& pm) {
      std::vector<std::pair<int, int>> edges;
      for (const auto& [i, j] : pm.arcs()) edges.emplace_back(i - 1, j - 1);
      // Spanning trees are (n_vertices - 1)-subsets of edges without cycles.
      const int e = static_cast<int>(edges.size());
      std::vector<int> pick;
      std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == n_vertices - 1) {
          detail::DisjointSets uf(at(n_vertices));
          for (int idx : pick) {
            if (!uf.unite(at(owner[at(edges[at(idx)].first)] - 1), at(owner[at(edges[at(idx)].second)] - 1))) return;
          }
          if (uf.classes() != 1) return;
          for (int root = 1; root <= n_vertices; ++root) {
            TreeRootedMap m;
            m.root_vertex = root;
            for (int v = 1; v <= n_vertices; ++v) m.vertices.push_back(v);
            m.vertex_of = owner;
            m.partner.assign(at(h), -1);
            m.in_tree.assign(at(h), false);
            for (const auto& [a, b] : edges) {
              m.partner[at(a)] = b;
              m.partner[at(b)] = a;
            }
            for (int idx : pick) {
              m.in_tree[at(edges[at(idx)].first)] = true;
              m.in_tree[at(edges[at(idx)].second)] = true;
            }
            for (int v = 1; v <= n_vertices; ++v) m.rotation[v];
            for (int x = 0; x < h; ++x) m.rotation[owner[at(x)]].push_back(x);
            unique.insert(canonical_form(m));
          }
          return;
        }
        for (int idx = from; idx < e; ++idx) {
          pick.push_back(idx);
          choose(idx + 1);
          pick.pop_back();
        }
      };
      choose(0);
    });
  };

  if (n_vertices == 1) {
    degree[0] = h;
    emit_for_degrees();
  } else {
    // Compositions of 2e into n_vertices positive parts.
    std::function<void(int, int)> compose = [&](int v, int left) {
      if (v == n_vertices - 1) {
        if (left < 1) return;
        degree[at(v)] = left;
        emit_for_degrees();
        return;
      }
      for (int d = 1; d <= left - (n_vertices - 1 - v); ++d) {
        degree[at(v)] = d;
        compose(v + 1, left - d);
      }
    };
    compose(0, h);
  }

  found.assign(unique.begin(), unique.end());
  return found;
}

}  // namespace qrook
