#ifndef QROOK_TREE_MAP_HPP
#define QROOK_TREE_MAP_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qrook {

// Combinatorial map with labeled vertices, a root vertex and a marked
// spanning tree. Half-edges are the ids 0..2e-1.
//
// rotation[v] lists the half-edges at v counterclockwise. At the root it is a
// linear order (broken at the root corner); elsewhere it is cyclic, stored
// with its smallest half-edge first.
struct TreeRootedMap {
  int root_vertex = 1;
  std::vector<int> vertices;  // sorted labels
  std::vector<int> vertex_of;
  std::map<int, std::vector<int>> rotation;
  std::vector<int> partner;
  std::vector<bool> in_tree;

  int half_edge_count() const { return static_cast<int>(partner.size()); }
  int edge_count() const { return half_edge_count() / 2; }

  friend bool operator==(const TreeRootedMap&, const TreeRootedMap&) = default;
};

// Empty when every invariant holds, otherwise a description of the first
// broken one.
std::optional<std::string> validate_map(const TreeRootedMap& map);

// Orbits of h -> rotation-successor(partner(h)); the root's linear order is
// closed up cyclically for this purpose.
int count_faces(const TreeRootedMap& map);

// Rotates every non-root cyclic order so its smallest half-edge comes first.
void normalize_rotations(TreeRootedMap& map);

// Renumbers half-edges by a traversal that starts with the root's linear
// order and enters every other vertex through its first-reached half-edge.
// Two maps are isomorphic (fixing vertex labels) iff their canonical forms
// are equal. Requires a connected map.
TreeRootedMap canonical_form(const TreeRootedMap& map);

// Applies a vertex relabeling (old label -> new label) to every field.
TreeRootedMap relabel_vertices(const TreeRootedMap& map, const std::map<int, int>& relabel);

// Brute-force enumeration of all tree-rooted maps with the given numbers of
// edges and vertices (vertex set {1..n_vertices}, any root), returned in
// canonical form and sorted. Only meant for small sizes.
std::vector<TreeRootedMap> enumerate_tree_rooted_maps(int n_edges, int n_vertices);

// Strict weak order on canonical forms, for sets and sorting.
bool canonical_less(const TreeRootedMap& a, const TreeRootedMap& b);

}  // namespace qrook

#endif  // QROOK_TREE_MAP_HPP
