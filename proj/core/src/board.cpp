#include "qrook/board.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qrook {

int YoungBoard::cell_count() const { return std::accumulate(mu.begin(), mu.end(), 0); }

bool YoungBoard::is_valid() const {
  if (s < 0) return false;
  const int n = rows();
  int previous = s;
  for (int len : mu) {
    if (len < previous || len > s + n) return false;
    previous = len;
  }
  return true;
}

int RookPlacement::left_block_rooks() const {
  int count = 0;
  for (int c : rook_column) count += (c <= board.s) ? 1 : 0;
  return count;
}

bool RookPlacement::is_valid() const {
  if (!board.is_valid() || static_cast<int>(rook_column.size()) != board.rows()) return false;
  std::vector<bool> used(static_cast<std::size_t>(board.s + board.rows()) + 1, false);
  for (int row = 1; row <= board.rows(); ++row) {
    const int c = rook_column[static_cast<std::size_t>(row - 1)];
    if (!board.contains(row, c) || used[static_cast<std::size_t>(c)]) return false;
    used[static_cast<std::size_t>(c)] = true;
  }
  return true;
}

void for_each_board(int n, int s, const std::function<void(const YoungBoard&)>& visit) {
  if (n < 0 || s < 0) throw std::invalid_argument("for_each_board: n and s must be nonnegative");
  YoungBoard board{s, std::vector<int>(static_cast<std::size_t>(n), s)};
  if (n == 0) {
    visit(board);
    return;
  }
  // Odometer over weakly increasing sequences in [s, s+n].
  while (true) {
    visit(board);
    int i = n - 1;
    while (i >= 0 && board.mu[static_cast<std::size_t>(i)] == s + n) --i;
    if (i < 0) return;
    const int value = board.mu[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < n; ++j) board.mu[static_cast<std::size_t>(j)] = value;
  }
}

std::vector<YoungBoard> enumerate_boards(int n, int s) {
  std::vector<YoungBoard> out;
  for_each_board(n, s, [&](const YoungBoard& b) { out.push_back(b); });
  return out;
}

namespace {

void place_rows(RookPlacement& current, std::vector<bool>& used, int row,
                const std::function<void(const RookPlacement&)>& visit) {
  const int n = current.board.rows();
  if (row > n) {
    visit(current);
    return;
  }
  for (int c = 1; c <= current.board.row_length(row); ++c) {
    if (used[static_cast<std::size_t>(c)]) continue;
    used[static_cast<std::size_t>(c)] = true;
    current.rook_column[static_cast<std::size_t>(row - 1)] = c;
    place_rows(current, used, row + 1, visit);
    used[static_cast<std::size_t>(c)] = false;
  }
}

}  // namespace

void for_each_rook_placement(const YoungBoard& board,
                             const std::function<void(const RookPlacement&)>& visit) {
  RookPlacement current{board, std::vector<int>(board.mu.size(), 0)};
  int width = board.s;
  for (int len : board.mu) width = std::max(width, len);
  std::vector<bool> used(static_cast<std::size_t>(width) + 1, false);
  place_rows(current, used, 1, visit);
}

std::vector<RookPlacement> enumerate_rook_placements(const YoungBoard& board) {
  std::vector<RookPlacement> out;
  for_each_rook_placement(board, [&](const RookPlacement& p) { out.push_back(p); });
  return out;
}

BigInt rook_count(const YoungBoard& board) {
  BigInt total = 1;
  for (int i = 1; i <= board.rows(); ++i) {
    const int choices = board.row_length(i) - i + 1;
    if (choices <= 0) return 0;
    total *= choices;
  }
  return total;
}

int inv_statistic(const RookPlacement& placement) {
  const YoungBoard& board = placement.board;
  const int n = board.rows();
  // Cell (r, c) survives iff it is right of the rook in row r and no rook
  // above it sits in column c. Rows below r are at least as long, so the
  // column cross-out of a rook never leaves the board.
  int survivors = 0;
  for (int r = 1; r <= n; ++r) {
    const int rook = placement.rook_column[static_cast<std::size_t>(r - 1)];
    for (int c = rook + 1; c <= board.row_length(r); ++c) {
      bool crossed = false;
      for (int above = 1; above < r && !crossed; ++above) {
        crossed = placement.rook_column[static_cast<std::size_t>(above - 1)] == c;
      }
      if (!crossed) ++survivors;
    }
  }
  return survivors;
}

void for_each_rc(int n, int s, int k, const std::function<void(const RookPlacement&)>& visit) {
  for_each_board(n, s, [&](const YoungBoard& board) {
    for_each_rook_placement(board, [&](const RookPlacement& p) {
      if (k < 0 || p.left_block_rooks() == k) visit(p);
    });
  });
}

}  // namespace qrook
