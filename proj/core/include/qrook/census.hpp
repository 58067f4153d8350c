#ifndef QROOK_CENSUS_HPP
#define QROOK_CENSUS_HPP

#include <map>

#include "qrook/qlaurent.hpp"

namespace qrook {

BigInt binomial(int n, int k);            // zero outside 0 <= k <= n
BigInt double_factorial_odd(int n);       // (2n-1)!!, with (-1)!! = 1
// (2n-1)!! * C(n,k) * 2^k: the size of I_k(n), and the number of tree-rooted
// maps with n edges on k+1 labeled vertices.
BigInt involution_count(int n, int k);

// (2n-1)!! * sum_k C(N,k+1) C(n,k) 2^k.
BigInt harer_zagier_rhs(int n, int colors);

// Glues the sides of a 2n-gon in pairs (orientation-reversing) in all
// (2n-1)!! ways and histograms the number of vertices of the result.
// Requires 1 <= n <= 8.
std::map<int, BigInt> polygon_gluing_census(int n);

// sum_v census[v] * N^v.
BigInt census_polynomial(const std::map<int, BigInt>& census, int colors);

}  // namespace qrook

#endif  // QROOK_CENSUS_HPP
