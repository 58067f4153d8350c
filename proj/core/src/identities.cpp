#include "qrook/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "qrook/board.hpp"
#include "qrook/census.hpp"
#include "qrook/qcalc.hpp"

namespace qrook {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int choose2(int m) { return m * (m - 1) / 2; }

// q^(mu_i - i) [mu_i - i + 1]_q for row i.
QLaurent row_weight(int length, int row) {
  QLaurent w = QLaurent::q_power(length - row);
  return w.multiply_q_int(std::max(0, length - row + 1));
}

QLaurent placement_sum(int n, int s, int k) {
  const int offset = choose2(n + 1);
  std::map<int, BigInt> histogram;
  for_each_rc(n, s, k, [&](const RookPlacement& c) {
    histogram[inv_statistic(c) + c.board.cell_count() - offset] += 1;
  });
  return QLaurent::from_terms(histogram);
}

}  // namespace

BigInt classical_ident_lhs(int n, int s) {
  require(n >= 0 && s >= 0, "classical_ident_lhs: negative argument");
  BigInt total = 0;
  for_each_board(n, s, [&](const YoungBoard& board) { total += rook_count(board); });
  return total;
}

BigInt classical_ident_rhs(int n, int s) {
  require(n >= 0 && s >= 0, "classical_ident_rhs: negative argument");
  BigInt total = 0;
  for (int k = 0; k <= std::min(n, s); ++k) total += binomial(s, k) * involution_count(n, k);
  return total;
}

QLaurent conjecture_lhs(int n, int s) {
  require(n >= 0 && s >= 0, "conjecture_lhs: negative argument");
  // partial[m - s]: sum over prefixes whose current last row has length m.
  std::vector<QLaurent> partial(static_cast<std::size_t>(n) + 1);
  partial[0] = 1;  // empty prefix, treated as ending at length s
  for (int row = 1; row <= n; ++row) {
    QLaurent running;
    for (int m = s; m <= s + n; ++m) {
      running += partial[static_cast<std::size_t>(m - s)];
      partial[static_cast<std::size_t>(m - s)] = running * row_weight(m, row);
    }
  }
  if (n == 0) return 1;
  QLaurent total;
  for (const QLaurent& p : partial) total += p;
  return total;
}

QLaurent conjecture_lhs_by_boards(int n, int s) {
  require(n >= 0 && s >= 0, "conjecture_lhs_by_boards: negative argument");
  QLaurent total;
  // prefix[i] = product of the first i row weights.
  std::vector<QLaurent> prefix(static_cast<std::size_t>(n) + 1);
  prefix[0] = 1;
  std::vector<int> mu(static_cast<std::size_t>(n));
  std::function<void(int, int)> grow = [&](int row, int low) {
    if (row > n) {
      total += prefix[static_cast<std::size_t>(n)];
      return;
    }
    for (int m = low; m <= s + n; ++m) {
      const auto r = static_cast<std::size_t>(row);
      if (m - row + 1 <= 0) {
        // zero factor: the whole subtree contributes nothing at this length
        continue;
      }
      prefix[r] = prefix[r - 1];
      prefix[r].shift(m - row).multiply_q_int(m - row + 1);
      grow(row + 1, m);
    }
  };
  grow(1, s);
  return total;
}

QLaurent conjecture_lhs_by_placements(int n, int s) {
  require(n >= 0 && s >= 0, "conjecture_lhs_by_placements: negative argument");
  return placement_sum(n, s, -1);
}

QLaurent conjecture_rhs_term(int n, int s, int k) {
  require(n >= 0 && s >= 0, "conjecture_rhs_term: negative argument");
  if (k < 0 || k > std::min(n, s)) return QLaurent();
  QLaurent term = QLaurent::q_power(n * (s - k) + choose2(k));
  term *= q_double_factorial_odd(n);
  term *= q_binomial(s, k);
  term *= q_binomial(n, k);
  for (int i = 1; i <= k; ++i) term *= QLaurent(1) + QLaurent::q_power(n + i);
  return term;
}

QLaurent conjecture_rhs(int n, int s) {
  QLaurent total;
  for (int k = 0; k <= std::min(n, s); ++k) total += conjecture_rhs_term(n, s, k);
  return total;
}

std::pair<QLaurent, QLaurent> special_case_k_eq_n(int n, int s) {
  require(s >= n && n >= 1, "special_case_k_eq_n: requires s >= n >= 1");
  return {placement_sum(n, s, n), conjecture_rhs_term(n, s, n)};
}

QLaurent aggregate_qC(int n, int colors) {
  require(n >= 1 && colors >= 1, "aggregate_qC: requires n >= 1 and N >= 1");
  QLaurent total;
  for (int s = 0; s < colors; ++s) total += conjecture_lhs(n, s).shifted(-(n - 1) * s);
  return total;
}

QLaurent aggregate_qC_closed_form(int n, int colors) {
  require(n >= 1 && colors >= 1, "aggregate_qC_closed_form: requires n >= 1 and N >= 1");
  QLaurent total;
  for (int k = 0; k <= std::min(n, colors - 1); ++k) {
    QLaurent term = QLaurent::q_power(choose2(k) - (n - 1) * k);
    term *= q_binomial(colors, k + 1);
    term *= q_binomial(n, k);
    for (int i = 1; i <= k; ++i) term *= QLaurent(1) + QLaurent::q_power(n + i);
    total += term;
  }
  return total * q_double_factorial_odd(n);
}

}  // namespace qrook
