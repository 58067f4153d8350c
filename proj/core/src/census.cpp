#include "qrook/census.hpp"

#include <stdexcept>

#include "disjoint_sets.hpp"
#include "qrook/involution.hpp"

namespace qrook {

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt double_factorial_odd(int n) {
  if (n < 0) throw std::invalid_argument("double_factorial_odd: negative argument");
  BigInt out = 1;
  for (int i = 1; i <= n; ++i) out *= 2 * i - 1;
  return out;
}

BigInt involution_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return double_factorial_odd(n) * binomial(n, k) * two_k;
}

BigInt harer_zagier_rhs(int n, int colors) {
  if (n < 1 || colors < 1) throw std::invalid_argument("harer_zagier_rhs: requires n >= 1 and N >= 1");
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    BigInt two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    sum += binomial(colors, k + 1) * binomial(n, k) * two_k;
  }
  return double_factorial_odd(n) * sum;
}

std::map<int, BigInt> polygon_gluing_census(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("polygon_gluing_census: requires 1 <= n <= 8");
  const int sides = 2 * n;
  std::map<int, BigInt> census;
  // Side i (1-based) runs from corner i-1 to corner i (mod 2n). Gluing sides
  // a and b with reversed orientation identifies the start of a with the end
  // of b and the end of a with the start of b.
  for_each_matching(sides, [&](const PerfectMatching& gluing) {
    detail::DisjointSets corners(static_cast<std::size_t>(sides));
    auto corner = [&](int c) { return static_cast<std::size_t>(((c % sides) + sides) % sides); };
    for (const auto& [a, b] : gluing.arcs()) {
      corners.unite(corner(a - 1), corner(b));
      corners.unite(corner(a), corner(b - 1));
    }
    census[static_cast<int>(corners.classes())] += 1;
  });
  return census;
}

BigInt census_polynomial(const std::map<int, BigInt>& census, int colors) {
  BigInt total = 0;
  for (const auto& [v, count] : census) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(colors), static_cast<unsigned long>(v));
    total += count * power;
  }
  return total;
}

}  // namespace qrook
