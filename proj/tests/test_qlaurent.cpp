#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qrook/qlaurent.hpp"

using qrook::BigInt;
using qrook::QLaurent;

namespace {

QLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 6), exponent(-5, 8), coefficient(-20, 20);
  std::map<int, BigInt> t;
  for (int i = terms(rng); i > 0; --i) t[exponent(rng)] += coefficient(rng);
  return QLaurent::from_terms(t);
}

oracle::Poly to_poly(const QLaurent& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = c.get_si();
  return out;
}

}  // namespace

TEST(QLaurent, ZeroHasNoTerms) {
  QLaurent zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.term_count(), 0U);
  EXPECT_EQ(zero, QLaurent(0));
  EXPECT_EQ(zero.to_string(), "0");
}

TEST(QLaurent, CancellationTrimsBothEnds) {
  QLaurent a = QLaurent::q_power(-3) + QLaurent(2) + QLaurent::q_power(4);
  a -= QLaurent::q_power(-3);
  a -= QLaurent::q_power(4);
  EXPECT_EQ(a, QLaurent(2));
  EXPECT_EQ(a.low_degree(), 0);
  EXPECT_EQ(a.degree(), 0);
}

TEST(QLaurent, NegativeExponentsAreFirstClass) {
  const QLaurent a = QLaurent::q_power(-2) + QLaurent(1);
  const QLaurent b = QLaurent::q_power(2) - QLaurent(1);
  const QLaurent product = a * b;
  EXPECT_EQ(product, QLaurent::q_power(2) - QLaurent::q_power(-2));
  EXPECT_EQ(product.low_degree(), -2);
  EXPECT_EQ(product.at_one(), 0);
}

TEST(QLaurent, ArithmeticMatchesMapOracle) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const QLaurent a = random_laurent(rng);
    const QLaurent b = random_laurent(rng);
    EXPECT_EQ(to_poly(a + b), oracle::add(to_poly(a), to_poly(b)));
    EXPECT_EQ(to_poly(a * b), oracle::mul(to_poly(a), to_poly(b)));
    EXPECT_EQ(a - a, QLaurent());
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(QLaurent, MultiplyQIntMatchesProduct) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const QLaurent a = random_laurent(rng);
    for (int n = 0; n <= 6; ++n) {
      QLaurent fast = a;
      fast.multiply_q_int(n);
      EXPECT_EQ(fast, a * oracle::to_laurent(oracle::bracket(n)));
    }
  }
}

TEST(QLaurent, ExactDivision) {
  const QLaurent a = oracle::to_laurent(oracle::bracket(5));
  const QLaurent b = oracle::to_laurent(oracle::bracket(3)).shifted(-2);
  EXPECT_EQ(qrook::divide_exact(a * b, b), a);
  EXPECT_EQ(qrook::divide_exact(a * b, a), b);
  EXPECT_THROW(qrook::divide_exact(a, b), std::logic_error);
  EXPECT_THROW(qrook::divide_exact(a, QLaurent()), std::logic_error);
}

TEST(QLaurent, BigCoefficientsStayExact) {
  QLaurent p = QLaurent(1) + QLaurent::q_power(1);
  p = qrook::pow(p, 100);
  BigInt expected;
  mpz_bin_uiui(expected.get_mpz_t(), 100, 50);
  EXPECT_EQ(p.coefficient(50), expected);
  BigInt two_100;
  mpz_ui_pow_ui(two_100.get_mpz_t(), 2, 100);
  EXPECT_EQ(p.at_one(), two_100);
}

TEST(QLaurent, SubstitutePower) {
  const QLaurent p = QLaurent(1) + QLaurent::q_power(-1) * QLaurent(3);
  EXPECT_EQ(p.substitute_power(2), QLaurent(1) + QLaurent::q_power(-2) * QLaurent(3));
}

TEST(QLaurent, ToString) {
  EXPECT_EQ((QLaurent(1) + QLaurent::q_power(1) + QLaurent::monomial(2, 2)).to_string(), "1 + q + 2*q^2");
  EXPECT_EQ((QLaurent::q_power(-1) * QLaurent(-1)).to_string(), "-q^-1");
}

TEST(QLaurent, JsonRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const QLaurent a = random_laurent(rng);
    EXPECT_EQ(qrook::qlaurent_from_json(qrook::to_json(a)), a);
  }
  EXPECT_EQ(qrook::to_json(QLaurent::q_power(-2) + QLaurent(5)), R"({"-2":"1","0":"5"})");
  EXPECT_EQ(qrook::qlaurent_from_json(R"({"3": 2, "-1": "-4"})"), QLaurent::monomial(2, 3) - QLaurent::monomial(4, -1));
}

TEST(QLaurent, JsonRejectsMalformedInput) {
  EXPECT_THROW(qrook::qlaurent_from_json("[1,2]"), std::invalid_argument);
  EXPECT_THROW(qrook::qlaurent_from_json(R"({"x":"1"})"), std::invalid_argument);
  EXPECT_THROW(qrook::qlaurent_from_json(R"({"1":"one"})"), std::invalid_argument);
  EXPECT_THROW(qrook::qlaurent_from_json("{"), std::invalid_argument);
}
