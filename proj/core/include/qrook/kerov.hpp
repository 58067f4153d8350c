#ifndef QROOK_KEROV_HPP
#define QROOK_KEROV_HPP

#include "qrook/board.hpp"
#include "qrook/involution.hpp"

namespace qrook {

// Kerov's correspondence RC_k(n,s) <-> I_k(n,s).
//
// The upper/right boundary of a board is numbered -s..-1 along the tops of
// the left-block columns, then 1..2n along the staircase of the n x n part
// (a horizontal segment for every column top, a vertical segment for every
// row end). Each rook becomes the arc joining the top of its column to the
// right end of its row; every unused segment is a fixed point.
SignedInvolution kappa(const RookPlacement& placement);

// Inverse of kappa. A positive point is a column top exactly when it is
// fixed or the smaller end of a positive arc; every other positive point is
// a row end. Throws std::invalid_argument if the involution is not in any
// I_k(n,s).
RookPlacement kappa_inv(const SignedInvolution& involution);

}  // namespace qrook

#endif  // QROOK_KEROV_HPP
