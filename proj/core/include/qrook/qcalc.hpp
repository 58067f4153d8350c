#ifndef QROOK_QCALC_HPP
#define QROOK_QCALC_HPP

#include <functional>
#include <string>
#include <vector>

#include "qrook/qlaurent.hpp"

namespace qrook {

// q-analogues of the usual integer building blocks. All take n >= 0 and
// throw std::invalid_argument otherwise.
QLaurent q_int(int n);                    // [n]_q = 1 + q + ... + q^(n-1)
QLaurent q_factorial(int n);              // [n]_q!
QLaurent q_binomial(int n, int k);        // zero when k < 0 or k > n
QLaurent q_double_factorial_odd(int n);   // [2n-1]_q!!, with [-1]_q!! = 1

// Polynomial in x whose coefficients are Laurent polynomials in q.
// coefficients[d] multiplies x^d; trailing zero coefficients are trimmed.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<QLaurent> coefficients);

  static XPoly x_power(int degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QLaurent& coefficient(int d) const;
  const std::vector<QLaurent>& coefficients() const { return coeffs_; }

  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const QLaurent& scalar, const XPoly& p);
  XPoly times_x() const;

  friend bool operator==(const XPoly&, const XPoly&) = default;

  std::string to_string() const;
  // JSON array of serialized QLaurent coefficients, index = x-degree.
  std::string to_json() const;

 private:
  void trim();
  std::vector<QLaurent> coeffs_;
};

// H_{n+1} = x H_n - q^(n-1) [n]_q H_{n-1}, H_0 = 1, H_1 = x.
XPoly hermite_q(int n);
// Closed form sum_k (-1)^k q^(k(k-1)) qbinom(n,2k) [2k-1]_q!! x^(n-2k).
XPoly hermite_q_explicit(int n);

// Three-term recurrence coefficients P_{n+1} = (x - b_n) P_n - lambda_n P_{n-1},
// used as Motzkin path step weights keyed by the step's starting level.
struct RecurrenceWeights {
  std::function<QLaurent(int)> east;       // b_level
  std::function<QLaurent(int)> southeast;  // lambda_level, level >= 1
};

RecurrenceWeights classical_hermite_weights();  // b = 0, lambda_k = k
RecurrenceWeights q_hermite_weights();          // b = 0, lambda_k = q^(k-1)[k]_q

// Weighted sum over Motzkin paths of the given length from start_level to
// end_level that never go below level 0. Northeast steps weigh 1; east steps
// are only allowed when allow_east is set. Evaluated by dynamic programming
// over (position, level).
QLaurent motzkin_moment(int length, int start_level, int end_level,
                        const RecurrenceWeights& weights, bool allow_east);

// f(n,s) = q^C(s,2) [s]_q! * sum over Motzkin paths of length 2n at level s,
// i.e. the normalized 2n-th moment of x against H_s^2.
QLaurent f_moment(int n, int s);

// f(n,s) minus the recurrence right-hand side in terms of f(n+1, .) and
// f(n, s-2). Zero whenever the recurrence holds. Requires s >= 2.
QLaurent f_recurrence_residual(int n, int s);

// sum_t (-1)^t sum_a q^(a^2+(t-a)^2-t) qbinom(s,2a) qbinom(s,2(t-a))
//   [2a-1]!! [2(t-a)-1]!! [2(n+s-t)-1]!!
// Expanding H_s^2 termwise against the moments [2m-1]_q!! shows this equals
// f(n,s) itself, with no q^C(s,2) [s]_q! normalization.
QLaurent q_inclusion_exclusion(int n, int s);

}  // namespace qrook

#endif  // QROOK_QCALC_HPP
