#include "qrook/kerov.hpp"

#include <stdexcept>

namespace qrook {

SignedInvolution kappa(const RookPlacement& placement) {
  if (!placement.is_valid()) throw std::invalid_argument("kappa: invalid rook placement");
  const YoungBoard& board = placement.board;
  const int n = board.rows();
  const int s = board.s;

  // column_segment[c] / row_segment[r]: boundary label of column c's top
  // and row r's right end.
  std::vector<int> column_segment(static_cast<std::size_t>(s + n) + 1, 0);
  std::vector<int> row_segment(static_cast<std::size_t>(n) + 1, 0);
  for (int c = 1; c <= s; ++c) column_segment[static_cast<std::size_t>(c)] = c - s - 1;
  int label = 0;
  int column = s;
  for (int r = 1; r <= n; ++r) {
    while (column < board.row_length(r)) column_segment[static_cast<std::size_t>(++column)] = ++label;
    row_segment[static_cast<std::size_t>(r)] = ++label;
  }
  while (column < s + n) column_segment[static_cast<std::size_t>(++column)] = ++label;

  SignedInvolution out(s, n);
  for (int r = 1; r <= n; ++r) {
    const int c = placement.rook_column[static_cast<std::size_t>(r - 1)];
    out.pair(column_segment[static_cast<std::size_t>(c)], row_segment[static_cast<std::size_t>(r)]);
  }
  return out;
}

RookPlacement kappa_inv(const SignedInvolution& involution) {
  if (!involution.membership_k()) throw std::invalid_argument("kappa_inv: involution is not in I_k(n,s)");
  const int s = involution.negatives();
  const int n = involution.half_positive();

  // Walk the boundary: column tops advance the column counter, row ends
  // close a row at the current width.
  std::vector<int> column_of_segment(static_cast<std::size_t>(2 * n) + 1, 0);
  YoungBoard board{s, {}};
  std::vector<int> row_end_points;
  int column = s;
  for (int p = 1; p <= 2 * n; ++p) {
    const int image = involution(p);
    const bool column_top = image == p || (image > 0 && p < image);
    if (column_top) {
      column_of_segment[static_cast<std::size_t>(p)] = ++column;
    } else {
      board.mu.push_back(column);
      row_end_points.push_back(p);
    }
  }
  if (board.rows() != n) throw std::invalid_argument("kappa_inv: boundary word is unbalanced");

  RookPlacement out{board, {}};
  for (int p : row_end_points) {
    const int partner = involution(p);
    out.rook_column.push_back(partner < 0 ? partner + s + 1 : column_of_segment[static_cast<std::size_t>(partner)]);
  }
  return out;
}

}  // namespace qrook
