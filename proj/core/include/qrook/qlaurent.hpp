#ifndef QROOK_QLAURENT_HPP
#define QROOK_QLAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qrook {

using BigInt = mpz_class;

// Laurent polynomial in q with arbitrary-precision integer coefficients.
//
// Stored densely from the lowest to the highest nonzero exponent; both ends
// are always nonzero, so the representation of a given polynomial is unique
// and operator== is coefficient-wise equality. The zero polynomial has no
// coefficients at all.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long constant);  // NOLINT: integers promote naturally
  explicit QLaurent(const BigInt& constant);

  static QLaurent monomial(const BigInt& coefficient, int exponent);
  static QLaurent q_power(int exponent) { return monomial(1, exponent); }
  // Builds from (exponent, coefficient) terms; repeated exponents are summed.
  static QLaurent from_terms(const std::map<int, BigInt>& terms);
  // Dense constructor: coefficients[i] multiplies q^(low + i).
  static QLaurent from_dense(int low, std::vector<BigInt> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest / highest exponent with a nonzero coefficient. Zero has neither;
  // both return 0 for it.
  int low_degree() const { return coeffs_.empty() ? 0 : low_; }
  int degree() const {
    return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  BigInt coefficient(int exponent) const;
  std::map<int, BigInt> terms() const;
  std::size_t term_count() const;

  QLaurent& operator+=(const QLaurent& rhs);
  QLaurent& operator-=(const QLaurent& rhs);
  QLaurent& operator*=(const QLaurent& rhs);
  // Multiplies by q^exponent in place.
  QLaurent& shift(int exponent);
  // Multiplies by [n]_q = 1 + q + ... + q^(n-1) in place (n >= 0), using a
  // running window sum instead of a full product.
  QLaurent& multiply_q_int(int n);

  friend QLaurent operator+(QLaurent lhs, const QLaurent& rhs) { return lhs += rhs; }
  friend QLaurent operator-(QLaurent lhs, const QLaurent& rhs) { return lhs -= rhs; }
  friend QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs);
  friend QLaurent operator-(QLaurent value);

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.low_degree() == b.low_degree() && a.coeffs_ == b.coeffs_;
  }

  QLaurent shifted(int exponent) const {
    QLaurent copy = *this;
    return copy.shift(exponent);
  }

  // Specialization q -> 1 (sum of coefficients).
  BigInt at_one() const;
  // Substitutes q -> q^factor (factor >= 1).
  QLaurent substitute_power(int factor) const;
  bool has_nonnegative_coefficients() const;

  // "1 + q + 2*q^2 - q^-1" style rendering, lowest exponent first.
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

// Exact quotient a / b. Throws std::logic_error when b is zero or does not
// divide a; a nonzero remainder always indicates an arithmetic bug upstream.
QLaurent divide_exact(const QLaurent& dividend, const QLaurent& divisor);

QLaurent pow(const QLaurent& base, unsigned exponent);

// JSON object {"exponent": "coefficient", ...} with exponents and
// coefficients as signed decimal strings, exponents in increasing order.
std::string to_json(const QLaurent& value);
// Inverse of to_json. Throws std::invalid_argument on malformed input.
QLaurent qlaurent_from_json(const std::string& text);

}  // namespace qrook

#endif  // QROOK_QLAURENT_HPP
