#ifndef QROOK_IDENTITIES_HPP
#define QROOK_IDENTITIES_HPP

#include <utility>

#include "qrook/qlaurent.hpp"

namespace qrook {

// sum over Y(n,s) of prod_i (mu_i - i + 1).
BigInt classical_ident_lhs(int n, int s);
// sum_k (2n-1)!! C(s,k) C(n,k) 2^k.
BigInt classical_ident_rhs(int n, int s);

// sum over Y(n,s) of prod_i q^(mu_i - i) [mu_i - i + 1]_q. Boards are
// summed row by row: the partial sums over all prefixes ending in a given
// row length are carried forward, so the cost is polynomial in n and s
// rather than proportional to |Y(n,s)|.
QLaurent conjecture_lhs(int n, int s);
// The same sum, visiting every board of Y(n,s) explicitly.
QLaurent conjecture_lhs_by_boards(int n, int s);
// sum over RC(n,s) of q^(inv(C) + |mu| - C(n+1,2)).
QLaurent conjecture_lhs_by_placements(int n, int s);

// sum_{k=0}^{min(n,s)} q^(n(s-k) + C(k,2)) [2n-1]_q!! qbinom(s,k) qbinom(n,k)
//   prod_{i=1}^k (1 + q^(n+i)).
QLaurent conjecture_rhs(int n, int s);
// The k-th summand of conjecture_rhs.
QLaurent conjecture_rhs_term(int n, int s, int k);

// Left side restricted to RC_n(n,s) (every rook in the left block), by
// enumeration, paired with the k = n summand of the right side. s >= n >= 1.
std::pair<QLaurent, QLaurent> special_case_k_eq_n(int n, int s);

// sum_{s=0}^{N-1} q^(-(n-1)s) * conjecture_lhs(n,s).
QLaurent aggregate_qC(int n, int colors);
// [2n-1]_q!! sum_k q^(C(k,2) - (n-1)k) qbinom(N,k+1) qbinom(n,k)
//   prod_{i=1}^k (1 + q^(n+i)).
QLaurent aggregate_qC_closed_form(int n, int colors);

}  // namespace qrook

#endif  // QROOK_IDENTITIES_HPP
