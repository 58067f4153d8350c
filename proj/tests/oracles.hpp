// Brute-force reference computations for the tests. Nothing here calls into
// the library except to convert results for comparison.
#ifndef QROOK_TESTS_ORACLES_HPP
#define QROOK_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qrook/qlaurent.hpp"

namespace oracle {

// Exponent -> coefficient, zero entries erased.
using Poly = std::map<int, long long>;

inline void clean(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Poly add(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) a[e] += c;
  clean(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [e1, c1] : a) {
    for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
  }
  clean(out);
  return out;
}

inline Poly monomial(int e, long long c = 1) { return c == 0 ? Poly{} : Poly{{e, c}}; }

inline Poly bracket(int n) {
  Poly p;
  for (int i = 0; i < n; ++i) p[i] = 1;
  return p;
}

// q-Pascal: C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
inline Poly q_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<std::vector<Poly>> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i) + 1);
    t[static_cast<std::size_t>(i)][0] = monomial(0);
    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = monomial(0);
    for (int j = 1; j < i; ++j) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          add(t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)],
              mul(monomial(j), t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]));
    }
  }
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline Poly double_factorial_odd(int n) {
  Poly p = monomial(0);
  for (int i = 1; i <= n; ++i) p = mul(p, bracket(2 * i - 1));
  return p;
}

inline qrook::QLaurent to_laurent(const Poly& p) {
  std::map<int, qrook::BigInt> terms;
  for (const auto& [e, c] : p) terms[e] = qrook::BigInt(static_cast<long>(c));
  return qrook::QLaurent::from_terms(terms);
}

// sz over subsets of [n] given as bitmasks (bit i-1 <-> element i).
inline int sz(unsigned mask, int n) {
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    if (!(mask >> (i - 1) & 1U)) continue;
    for (int j = 1; j < i; ++j) total += (mask >> (j - 1) & 1U) ? 0 : 1;
  }
  return total;
}

// All perfect matchings of the listed points, as arc lists.
inline void matchings(std::vector<int> points, const std::function<void(const std::vector<std::pair<int, int>>&)>& visit,
                      std::vector<std::pair<int, int>>& arcs) {
  if (points.empty()) {
    visit(arcs);
    return;
  }
  const int first = points.front();
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 1; j < points.size(); ++j) {
      if (j != i) rest.push_back(points[j]);
    }
    arcs.emplace_back(first, points[i]);
    matchings(rest, visit, arcs);
    arcs.pop_back();
  }
}

inline void matchings(const std::vector<int>& points,
                      const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  std::vector<std::pair<int, int>> arcs;
  matchings(points, visit, arcs);
}

// crossings + 2 nestings of an arc list.
inline int cn(const std::vector<std::pair<int, int>>& arcs) {
  int total = 0;
  for (auto [a, b] : arcs) {
    for (auto [c, d] : arcs) {
      if (a > b) std::swap(a, b);
      if (c > d) std::swap(c, d);
      if (a < c && c < b && b < d) total += 1;
      if (a < c && d < b) total += 2;
    }
  }
  return total;
}

// Weakly increasing sequences in [s, s+n]^n, by brute force over all n-tuples.
inline std::vector<std::vector<int>> boards(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> mu(static_cast<std::size_t>(n), s);
  while (true) {
    if (std::is_sorted(mu.begin(), mu.end())) out.push_back(mu);
    int i = n - 1;
    while (i >= 0 && mu[static_cast<std::size_t>(i)] == s + n) mu[static_cast<std::size_t>(i--)] = s;
    if (i < 0) break;
    ++mu[static_cast<std::size_t>(i)];
  }
  return out;
}

// Full non-attacking placements on mu: injective maps rows -> columns with
// column <= mu[row]. Enumerated through permutations of all columns.
inline std::vector<std::vector<int>> placements(const std::vector<int>& mu) {
  const int n = static_cast<int>(mu.size());
  const int width = n == 0 ? 0 : *std::max_element(mu.begin(), mu.end());
  std::set<std::vector<int>> found;
  std::vector<int> columns(static_cast<std::size_t>(std::max(width, n)));
  std::iota(columns.begin(), columns.end(), 1);
  do {
    std::vector<int> rook(columns.begin(), columns.begin() + n);
    bool ok = true;
    for (int r = 0; r < n && ok; ++r) ok = rook[static_cast<std::size_t>(r)] <= mu[static_cast<std::size_t>(r)];
    if (ok) found.insert(rook);
  } while (std::next_permutation(columns.begin(), columns.end()));
  return {found.begin(), found.end()};
}

// Cross-out on an explicit grid: each rook crosses its cell, every cell below
// it in its column and every cell left of it in its row.
inline int inv(const std::vector<int>& mu, const std::vector<int>& rook) {
  const int n = static_cast<int>(mu.size());
  const int width = n == 0 ? 0 : mu.back();
  std::vector<std::vector<bool>> crossed(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(width) + 1, false));
  for (int r = 0; r < n; ++r) {
    const int c = rook[static_cast<std::size_t>(r)];
    for (int below = r; below < n; ++below) crossed[static_cast<std::size_t>(below)][static_cast<std::size_t>(c)] = true;
    for (int left = 1; left <= c; ++left) crossed[static_cast<std::size_t>(r)][static_cast<std::size_t>(left)] = true;
  }
  int survivors = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 1; c <= mu[static_cast<std::size_t>(r)]; ++c) survivors += crossed[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ? 0 : 1;
  }
  return survivors;
}

// Vertices of the surface obtained by gluing the sides of a 2n-gon: the
// cycles of gamma o sigma, where gamma rotates the sides and sigma swaps
// glued sides (sides 0-based).
inline int gluing_vertices(const std::vector<std::pair<int, int>>& arcs, int sides) {
  std::vector<int> sigma(static_cast<std::size_t>(sides));
  for (auto [a, b] : arcs) {
    sigma[static_cast<std::size_t>(a - 1)] = b - 1;
    sigma[static_cast<std::size_t>(b - 1)] = a - 1;
  }
  std::vector<bool> seen(static_cast<std::size_t>(sides), false);
  int cycles = 0;
  for (int start = 0; start < sides; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (sigma[static_cast<std::size_t>(x)] + 1) % sides) {
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  return cycles;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long double_factorial(int n) {
  long long r = 1;
  for (int i = 1; i <= n; ++i) r *= 2 * i - 1;
  return r;
}

}  // namespace oracle

#endif  // QROOK_TESTS_ORACLES_HPP
