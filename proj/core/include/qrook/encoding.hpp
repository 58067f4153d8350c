#ifndef QROOK_ENCODING_HPP
#define QROOK_ENCODING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qrook/board.hpp"
#include "qrook/involution.hpp"
#include "qrook/path.hpp"
#include "qrook/plane_tree.hpp"
#include "qrook/tree_map.hpp"

namespace qrook {

// Text encodings shared by the CLI and the tests. Every parse_* function
// throws std::invalid_argument on malformed input. Whitespace is ignored.

// Cycle list, cycles ordered by smallest point: "(-3,4)(-2,7)(1)(2,6)".
// Every point of {-s..-1} + [2n] must appear, fixed points included.
std::string format_involution(const SignedInvolution& involution);
SignedInvolution parse_involution(std::string_view text);

// "(1,3)(2,4)"
std::string format_matching(const PerfectMatching& matching);
PerfectMatching parse_matching(std::string_view text);

// "D[-1]D[-3]UUD[-2]U"; unlabeled down steps are plain "D".
std::string format_path(const LabeledPath& path);
LabeledPath parse_path(std::string_view text);

// "s=3;mu=4,4,7,7" (absolute row lengths, top row first).
std::string format_board(const YoungBoard& board);
YoungBoard parse_board(std::string_view text);

// "s=3;mu=4,4,7,7;rooks=2,3,5,7" (rook column for each row, top to bottom).
std::string format_placement(const RookPlacement& placement);
RookPlacement parse_placement(std::string_view text);

// "n=4;subset=2,3"
struct Subset {
  int ground_n = 0;
  std::vector<int> elements;
};
std::string format_subset(const Subset& subset);
Subset parse_subset(std::string_view text);

// Nested parentheses, one pair per vertex: "(()(()))" is a root with two
// children, the second of which has a child. Parsing numbers vertices in
// preorder.
std::string format_tree(const PlaneTree& tree);
PlaneTree parse_tree(std::string_view text);

// {"root":4,"vertices":[1,2,3,4],"rotation":{"4":[1,2,3],...},
//  "pairs":[[1,9],[2,4],...],"tree":[[2,4],...]}
// Half-edges are numbered from 1 in the JSON text (id + 1). Rotation lists
// follow the stored orders; pairs are sorted with the smaller end first.
std::string format_map(const TreeRootedMap& map);
TreeRootedMap parse_map(std::string_view text);

}  // namespace qrook

#endif  // QROOK_ENCODING_HPP
