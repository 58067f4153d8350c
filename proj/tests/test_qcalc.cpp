#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrook/census.hpp"
#include "qrook/identities.hpp"
#include "qrook/qcalc.hpp"

using namespace qrook;

namespace {

QLaurent poly(std::initializer_list<long> coefficients) {
  std::vector<BigInt> c;
  for (long v : coefficients) c.emplace_back(v);
  return QLaurent::from_dense(0, c);
}

int choose2(int m) { return m * (m - 1) / 2; }

}  // namespace

TEST(QInt, SmallValues) {
  EXPECT_EQ(q_int(0), QLaurent());
  EXPECT_EQ(q_int(1), QLaurent(1));
  EXPECT_EQ(q_int(3), poly({1, 1, 1}));
  EXPECT_THROW(q_int(-1), std::invalid_argument);
}

TEST(QBinomial, SpotValues) {
  EXPECT_EQ(q_binomial(5, 0), QLaurent(1));
  EXPECT_EQ(q_binomial(2, 1), poly({1, 1}));
  EXPECT_EQ(q_binomial(4, 2), poly({1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial(3, 4), QLaurent());
  EXPECT_EQ(q_double_factorial_odd(2), poly({1, 1, 1}));
  EXPECT_EQ(q_double_factorial_odd(0), QLaurent(1));
}

TEST(QBinomial, MatchesQPascalAndSzSums) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QLaurent b = q_binomial(n, k);
      EXPECT_EQ(b, oracle::to_laurent(oracle::q_binomial(n, k))) << n << "," << k;
      EXPECT_TRUE(b.has_nonnegative_coefficients());
      EXPECT_EQ(b.degree(), k * (n - k));
      EXPECT_EQ(b.at_one(), binomial(n, k));
    }
  }
  // sz oracle over 2-subsets of [4]
  oracle::Poly sum;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) == 2) sum = oracle::add(sum, oracle::monomial(oracle::sz(mask, 4)));
  }
  EXPECT_EQ(q_binomial(4, 2), oracle::to_laurent(sum));
}

TEST(QFactorial, ProductOfBrackets) {
  for (int n = 0; n <= 8; ++n) {
    oracle::Poly p = oracle::monomial(0);
    for (int i = 1; i <= n; ++i) p = oracle::mul(p, oracle::bracket(i));
    EXPECT_EQ(q_factorial(n), oracle::to_laurent(p));
    EXPECT_EQ(q_double_factorial_odd(n), oracle::to_laurent(oracle::double_factorial_odd(n)));
  }
}

TEST(Hermite, FirstPolynomials) {
  EXPECT_EQ(hermite_q(0), XPoly::x_power(0));
  EXPECT_EQ(hermite_q(1), XPoly::x_power(1));
  EXPECT_EQ(hermite_q(2), XPoly({QLaurent(-1), QLaurent(0), QLaurent(1)}));
  EXPECT_EQ(hermite_q(3), XPoly({QLaurent(), -q_int(3), QLaurent(), QLaurent(1)}));
  EXPECT_EQ(hermite_q_explicit(0), XPoly::x_power(0));
  EXPECT_EQ(hermite_q_explicit(2), XPoly({QLaurent(-1), QLaurent(0), QLaurent(1)}));
}

TEST(Hermite, RecurrenceMatchesExplicitFormula) {
  for (int n = 0; n <= 12; ++n) {
    const XPoly h = hermite_q(n);
    EXPECT_EQ(h, hermite_q_explicit(n)) << n;
    EXPECT_EQ(h.degree(), n);
    EXPECT_EQ(h.coefficient(n), QLaurent(1));
  }
}

TEST(Motzkin, ClassicalAndQHermite) {
  EXPECT_EQ(motzkin_moment(0, 3, 3, q_hermite_weights(), false), QLaurent(1));
  EXPECT_EQ(motzkin_moment(2, 0, 0, classical_hermite_weights(), false), QLaurent(1));
  EXPECT_EQ(motzkin_moment(3, 0, 0, q_hermite_weights(), false), QLaurent());
  EXPECT_EQ(motzkin_moment(2, 0, 3, q_hermite_weights(), false), QLaurent());
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(motzkin_moment(2 * n, 0, 0, q_hermite_weights(), false), q_double_factorial_odd(n)) << n;
    EXPECT_EQ(motzkin_moment(2 * n, 0, 0, classical_hermite_weights(), false), QLaurent(double_factorial_odd(n))) << n;
  }
}

TEST(Motzkin, EastStepsCountMotzkinNumbers) {
  RecurrenceWeights unit{[](int) { return QLaurent(1); }, [](int) { return QLaurent(1); }};
  const long motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
  for (int len = 0; len <= 8; ++len) EXPECT_EQ(motzkin_moment(len, 0, 0, unit, true), QLaurent(motzkin[len]));
}

TEST(FMoment, InitialValuesAndSmallCase) {
  EXPECT_EQ(f_moment(1, 1), poly({1, 1, 1}));
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(f_moment(n, 0), q_double_factorial_odd(n));
    EXPECT_EQ(f_moment(n, 1), q_double_factorial_odd(n + 1));
  }
}

TEST(FMoment, MatchesBoardSum) {
  for (int n = 1; n <= 6; ++n) {
    for (int s = 0; s <= 5; ++s) {
      EXPECT_EQ(f_moment(n, s), conjecture_lhs_by_boards(n, s) * q_factorial(s).shifted(choose2(s))) << n << "," << s;
    }
  }
}

TEST(FMoment, RecurrenceResidualVanishes) {
  EXPECT_EQ(f_recurrence_residual(1, 2), QLaurent());
  EXPECT_EQ(f_recurrence_residual(2, 3), QLaurent());
  EXPECT_EQ(f_recurrence_residual(3, 2), QLaurent());
  for (int n = 0; n <= 6; ++n) {
    for (int s = 2; s <= 5; ++s) EXPECT_EQ(f_recurrence_residual(n, s), QLaurent()) << n << "," << s;
  }
  EXPECT_THROW(f_recurrence_residual(1, 1), std::invalid_argument);
}

TEST(InclusionExclusion, SmallValues) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(q_inclusion_exclusion(n, 0), q_double_factorial_odd(n));
  EXPECT_EQ(q_inclusion_exclusion(1, 1), poly({1, 1, 1}));
}

TEST(InclusionExclusion, EqualsTheUnnormalizedMoment) {
  for (int n = 0; n <= 6; ++n) {
    for (int s = 0; s <= 4; ++s) EXPECT_EQ(q_inclusion_exclusion(n, s), f_moment(n, s)) << n << "," << s;
  }
}

TEST(InclusionExclusion, ClassicalLimitAtTwoTwo) {
  // E[x^2 (x^2-1)^2] for a standard Gaussian is 15 - 6 + 1.
  EXPECT_EQ(q_inclusion_exclusion(1, 2).at_one(), 10);
}

TEST(XPoly, JsonAndString) {
  EXPECT_EQ(hermite_q(2).to_json(), R"([{"0":"-1"},{},{"0":"1"}])");
  EXPECT_EQ(XPoly().to_string(), "0");
}
