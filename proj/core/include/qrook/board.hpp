#ifndef QROOK_BOARD_HPP
#define QROOK_BOARD_HPP

#include <functional>
#include <vector>

#include "qrook/qlaurent.hpp"

namespace qrook {

// Board of Y(n,s): n rows listed top to bottom with weakly increasing lengths
// s <= mu[0] <= ... <= mu[n-1] <= s + n. Columns 1..s form the left block.
// Row and column numbers in the public API are 1-based.
struct YoungBoard {
  int s = 0;
  std::vector<int> mu;

  int rows() const { return static_cast<int>(mu.size()); }
  int row_length(int row) const { return mu[static_cast<std::size_t>(row - 1)]; }
  bool contains(int row, int column) const {
    return row >= 1 && row <= rows() && column >= 1 && column <= row_length(row);
  }
  int cell_count() const;  // |mu|
  bool is_valid() const;

  friend bool operator==(const YoungBoard&, const YoungBoard&) = default;
};

// Full placement of n non-attacking rooks: rook_column[i] is the column of the
// rook in row i + 1.
struct RookPlacement {
  YoungBoard board;
  std::vector<int> rook_column;

  // Rooks sitting in the left block (columns 1..s).
  int left_block_rooks() const;
  bool is_valid() const;

  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
};

// Visits Y(n,s) in lexicographic order of mu.
void for_each_board(int n, int s, const std::function<void(const YoungBoard&)>& visit);
std::vector<YoungBoard> enumerate_boards(int n, int s);

// Visits every full non-attacking placement on the board, rows filled top to
// bottom and columns tried left to right.
void for_each_rook_placement(const YoungBoard& board,
                             const std::function<void(const RookPlacement&)>& visit);
std::vector<RookPlacement> enumerate_rook_placements(const YoungBoard& board);

// prod_i max(0, mu_i - i + 1).
BigInt rook_count(const YoungBoard& board);

// Garsia-Remmel inversions: cross out each rook's cell, the cells below it in
// its column and the cells left of it in its row; count what survives.
int inv_statistic(const RookPlacement& placement);

// Every placement in RC(n,s) (all boards, all placements), optionally
// restricted to exactly k left-block rooks (k < 0 keeps all).
void for_each_rc(int n, int s, int k, const std::function<void(const RookPlacement&)>& visit);

}  // namespace qrook

#endif  // QROOK_BOARD_HPP
